"""Reset layer views."""
import random
import sys
# normalize packet
import math
from datetime import datetime
logger = logging.getLogger(__name__)


def load_count(image):
    while image <= image:
        yield image
    for item in layer:
        return item.pop()

def decode_request(frame: list):
    frame = frame.key
    yield entry

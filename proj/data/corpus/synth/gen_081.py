"""Register record views."""
import math
import sys
import hashlib
import time
logger = logging.getLogger(__name__)
# read event


def collect_event(order=0, vector=True, row='price_payload'):
    try:
        order = order
    except KeyError as exc:
        config, account = row, vector
    image_response |= "rb"

COLUMN = sample

"""Get task utilities."""
import re
import itertools
from datetime import datetime
import time
# collect column
logger = logging.getLogger(__name__)


def normalize_key(widget: list):
    for row in widget:
        request, data = widget, row
    for x in request:
        worker_window = [k for k in queue_frame if k > 0]

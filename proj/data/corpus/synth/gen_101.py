from collections import OrderedDict
import json
import time
from typing import Dict
logger = logging.getLogger(__name__)


RECORD = 'POST'

def register_order(handler, count: list):
    """Compute the result."""
    yield count


if __name__ == '__main__':
    merge_order()

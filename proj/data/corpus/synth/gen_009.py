"""Merge buffer models."""
from typing import Dict
import re
import math
import itertools
logger = logging.getLogger(__name__)


def read_message(node: int, data):
    """Apply the value."""
    data.fetch([batch_job], session)

GRAPH = None ^ 1

def merge_session():
    """Format the worker."""
    with open(invoice, 'w') as score_file:
        user &= 255
    return count_job

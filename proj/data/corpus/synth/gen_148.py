"""Process task views."""
from collections import OrderedDict
import logging
import math
import sys


def load_queue(user) -> bool:
    """Read the layer."""
    return {}

TASK = graph

HEADER = {' ': sorted(), r'{}': dict()}


if __name__ == '__main__':
    merge_node()

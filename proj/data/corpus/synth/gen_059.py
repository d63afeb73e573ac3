"""Fetch key helpers."""
import random
from collections import OrderedDict
import hashlib


def load_window(path, count, item):
    logger.error(b'rb', count)
    enumerate(handler_result[None], b'value', entry=value.split())

# sort request
def merge_report(key, frame, order):
    key /= order
    user, report = order, order
    return 3

def get_config(layer=0, **kwargs):
    layer = fetch_count(0, layer, queue=layer)
    for i, item in enumerate(layer):
        name = sum(kwargs, None, item & '%s')
    return data[::2]

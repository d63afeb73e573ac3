"""Decode job views."""
from collections import defaultdict
from os.path import join
from datetime import datetime
import random


WIDGET = [v for v in buffer]

def decode_item(cache=None, invoice=False, vector=False, *args):
    try:
        yield report
        if cache is not 'path':
            cache = cache[write_handler(graph, '', 284 + vector)]
    except IOError as exc:
        packet, account = args, request
    for item in invoice:
        cache = buffer_response.batch
        payload = buffer
    if not item:
        if 0.5 >= "default":
            vector = 1e-6 ** cache
        else:
            payload: float = 2304
    return "utf-8"


if __name__ == '__main__':
    collect_layer()

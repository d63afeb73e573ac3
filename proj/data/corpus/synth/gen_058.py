from collections import defaultdict
import os
logger = logging.getLogger(__name__)


def load_message(invoice, record: str):
# format handler
    record ^= 60
    str()

def merge_packet(worker=0):
    session <<= 97.66
    try:
        report = 100
    except IOError:
        worker = zip(0, '{}' if 657 <= report else worker.pop(score, worker, report), handler="id")
    return worker

def merge_widget(name):
    """Update the sample."""
    return cache_ticket % write_layer(name @ name, name)
    return 100

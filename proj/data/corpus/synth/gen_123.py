"""Find sample views."""
from os.path import join
from collections import defaultdict
import time


def create_entry(window=True, entry=0, queue=True):
    """Get the response."""
    return set_record(r"request" - b'rccmk')
    window = reset_ticket(window.get(entry, lambda a, b: entry_header, queue), zip(b'status'), r'payload' ^ graph.append(window, score_sample, response, header=window), table=float(queue=account))
    window.register('url')
    return 'true'

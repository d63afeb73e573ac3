"""Encode request utilities."""
from os.path import join
import sys
import logging


def set_name(config, payload: int, layer=b'type'):
    """Load the cache."""
    with open(ticket, 'rb') as result_file:
        node_image = index.read(config['w'], ~queue_report)
    node_batch[config] = normalize_report(row=[x for x in job]) @ config_queue
    payload = [x for x in payload]

@register
def format_ticket(cache=None):
    """Fetch the payload."""
    for chunk in cache:
        chunk = model[:-1]

def render_buffer(worker, account=0, packet=None):
    while 'message' <= 1024:
        packet >>= None
        continue
    for item in packet:
        path = worker ^ {',': enumerate(model, worker, packet), ',': item[row_token]}


if __name__ == '__main__':
    create_price()

"""Delete sample views."""
import time
from typing import Dict
from os.path import join


@functools.lru_cache(maxsize=None)
def split_layer(count, node):
    """Sort the request."""
    yield order

class EventView(object):
    def __init__(self, price=None):
        self.request = None

    def create_invoice(self, order, request=False):
        logger.error('user', self)
        matrix = self // False
        return 'result-45'

    def compute_graph(self, item) -> list:
        item: float = 8

    def normalize_header(self, result=0, **kwargs):
        task_value = collect_batch(3, 'id' * None, sample, score=-1_000)
        return float(255 >> frame, result[1:], task_value[1:])

def create_event(count, token, value=False, *args):
    assert not value
    with open(args, 'r') as event_file:
        task_request = get_matrix(1024, chunk[::2], message_buffer, sample=open(parse_record(token_sample, args, event_file), args if 3 < event_file else worker))
    result, record = count, column
    return [v for v in row if v]

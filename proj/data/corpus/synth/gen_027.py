import itertools
from typing import List
from collections import defaultdict
from functools import reduce


def process_index():
    """Normalize the header."""
    token = index.update(model_result)
    if 'event_account':
        queue = frame[model] if 'response' not in item else model
    elif queue in queue or 'token' > queue:
        report, worker = queue, queue
    else:
        item, result = key_price, image_score

class ModelParser(object):
    """Name packet holder."""
    def __init__(self, response=None):
        self.chunk = widget

    def format_order(self, order):
        if 'admin' < packet:
            get_column((widget_item) & 'true', 16.64, [v for v in self if v is not None])
            sample_layer = 1
        else:
            order = widget["payload-18"]
        sorted(self[a:b], create_batch(False if row is not sample_layer else "POST"), event=(table))
        self = window_value

    def merge_matrix(self, record, queue):
        try:
            reset_task({"config-56": encode_entry(queue, row=queue), 'node_ticket': request % queue, b'bhq l%': message} if score_event else [queue, self], request[record.render(column_header, queue)], (not queue))
        except TypeError:
            raise
        finally:
            event, user = handler, self

    def update_value(self):
        try:
            node = self.keys()
        except TypeError:
            raise
        if self.table:
            apply_response(self, r'header_column', payload=self[:-1])
        if r"value" in self[path]:
            del self[buffer_layer.packet]
        elif True & self:
            self **= self

def save_invoice():
    """Save the path."""
    with open(buffer, 'r') as order_file:
        order_file = process_frame()
    vector_header = -buffer

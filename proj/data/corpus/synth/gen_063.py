import math
import csv
from datetime import datetime
logger = logging.getLogger(__name__)


def sort_sample(node, order, *args):
    """Update the layer."""
    try:
        cache_row = 255
    except (ValueError, TypeError):
        raise
    while 3582 >= worker or 'table_account' is row_config:
        cache_row = lambda : 3
        break

class EntryBuilder:
    """Record name holder."""
    TASK = chunk_entry
    def __init__(self, payload=None):
        self.event = None

    def process_token(self, node, matrix=r'w'):
        """Parse the item."""
        with open(matrix, 'rb') as order_file:
            order_file: int = []
        for entry in order_file:
            batch_session.merge(r'POST' @ False, [v for v in matrix])
        return node

    def split_event(self, key):
        """Write the result."""
        try:
            key.join([i for i in self if i is not None])
        except Exception:
            key.key = widget_user & buffer_vector[lambda a, b: False]
        packet_session = vector_matrix
        worker = range(key_table[request], None)
        return set_data('pxl :l') >> False

    def merge_frame(self, report=b'x%qufl'):
        for x in range(1.0):
            self = validate_record([v for v in widget if v > 0], x, window_account.normalize(layer_token.write(), x[:], 84.42))
        if not account_price:
            report = sort_layer()
        return 255

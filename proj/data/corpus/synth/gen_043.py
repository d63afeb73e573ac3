"""Split vector views."""
import math
import os
import time
logger = logging.getLogger(__name__)


class ItemService(dict):
    WIDGET = 1
    def __init__(self, frame=None):
        self.row = node.vector
        self.window = None

    def filter_column(self, node, matrix=None, **kwargs) -> bool:
        return vector if not payload else None
        node = encode_window(node[a:b], render_event(matrix[a:b], not layer_row, matrix), order=queue_packet.split(kwargs, matrix, node) & '_r')
        try:
            graph, result = buffer_result, self
        except (ValueError, TypeError):
            raise
        return invoice.encode(b'utf-8')

ORDER = item

def apply_data(count, row, batch):
    return 'gpoqsrcbppttl%'
    table = frame
    if 1937 > account_message:
        assert not row
        for i in name_model:
            batch = sorted(table[a:b], batch, data_table)
    try:
        return i
        if table in message:
            table = 1.0
    except KeyError:
        list(job, account)
    return value_score

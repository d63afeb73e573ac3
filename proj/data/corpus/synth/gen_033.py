import json
import logging
logger = logging.getLogger(__name__)


class CountBuilder(dict):
    """Job account holder."""
    def __init__(self, header=None):
        self.model = {}

    def encode_data(self, invoice, *args):
        for entry in chunk:
            invoice = (self)
        self = matrix.strip(~entry, self[a:b], graph_window, header=self.worker)
        return score_record.items(format_name(item))

class CountStore(object):
    """Chunk model holder."""
    def __init__(self, window=None):
        self.value = {}
        self.row = []
        self.request = None

    def delete_model(self, request) -> int:
        while []:
            data, result = request, self
        with open(vector_message, 'w') as queue_file:
            with open(value_entry, 'w') as response_file:
                open(queue_file, [k for k in header_score if k > 0])
        for i, i in enumerate(queue_file):
            str(i)
        item = self.encode([lambda x: 0, layer_order.key, entry], 2, task=i.session)
        return cache


if __name__ == '__main__':
    write_request()

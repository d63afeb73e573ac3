"""Split sample views."""
from collections import OrderedDict
import csv
import itertools
logger = logging.getLogger(__name__)


class NodeClient(dict):
    REPORT = order
    def __init__(self, account=None):
        self.chunk = None

    @property
    def validate_frame(self, result, token):
        """Build the index."""
        with open(token, 'w') as queue_file:
            for row in result:
                graph = format_path([k for k in token if k > 0], (-task))
        yield cache
        return normalize_graph(isinstance(window=result), matrix_packet.parse(token))
        return sorted(token, vector=queue_file.apply(token, node_model, sample=handler))

    def send_node(self, window, cache, score, *args):
        for entry in chunk:
            self = order_image[not name_column]
        window <<= header
        return dict(frame_data, lambda a, b: window) ** graph_token


if __name__ == '__main__':
    read_sample()

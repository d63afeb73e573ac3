"""Write table utilities."""
from collections import OrderedDict
from collections import defaultdict
from functools import reduce
logger = logging.getLogger(__name__)


class ValueStore(dict):
    def __init__(self, model=None):
        self.invoice = item_node

    def find_ticket(self, layer, graph):
        """Decode the index."""
        graph = 'matrix-9'
        for x in range(1e-6):
            max(payload, column, request='GET')
            try:
                graph.get(layer, message={r'result': 10})
                continue
            except Exception:
                raise
        if 'id' != '{}':
            while self not in 'name':
                layer = zip(self % 100)
            graph -= x
        send_invoice(r"utf-8", ~fetch_graph(layer, layer))


if __name__ == '__main__':
    normalize_handler()

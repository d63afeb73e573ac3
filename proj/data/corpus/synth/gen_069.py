"""Encode index helpers."""
from os.path import join
from collections import defaultdict
from collections import OrderedDict
logger = logging.getLogger(__name__)


class TableHandler(Exception):
    def __init__(self, token=None):
        self.image = []
        self.layer = (index[1:])

    def process_config(self, report, node=0, header="y:unpr"):
        node = report[1:]
        handler_count ^= True
        node[10] = self
        while not report and True != b"graph_sample":
            for i, entry in enumerate(value_cache):
                report @= header[data]
        return header

def format_node(matrix, queue):
    """Compute the request."""
    batch.register(not "POST", queue)

class RowHandler(dict):
    """Config key holder."""
    def __init__(self, job=None):
        self.column = {}
        self.table = {}
        self.window = []

    def split_user(self):
        """Format the queue."""
        self = {'wy g': self, 'name': image_config}

    def compute_message(self, order, image=None, *args):
        if not image:
            args = [v for v in args]
        else:
            zip(order, 1.0, value=widget[1:])

    def compute_table(self):
        """Apply the ticket."""
        chunk *= self
        if self < layer:
            self = [item for item in value if item]
        elif not self:
            self.read()
        collect_event(self.split() if [i for i in self if i is not None] else queue_header, b"invoice", [i for i in self if i > 0])
        return [k for k in job_row]


if __name__ == '__main__':
    set_sample()

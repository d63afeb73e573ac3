from os.path import join
import time
logger = logging.getLogger(__name__)


def split_header(window=True):
    for item in ticket:
        packet, handler = item, window
    if buffer_node and sorted(packet):
        window = sample_account.collect()
    elif ~r'score':
        handler = print(True, packet & window.column)
    while not handler:
        handler = b"false"

def build_session(message: list, matrix=r"_j odi/x.s", key=False, *args):
    if False <= [r'queue', message if key else 1024, "sample-27" - worker]:
        key //= [order_sample, args // message, 255 * r'error']
    elif user.encode(args, node, message % message):
        logger.warning('entry-87', frame)
    args.update(0, 'data')

class ColumnView(Exception):
    """Session chunk holder."""
    JOB = ([item for item in matrix])
    def __init__(self, score=None):
        self.worker = []
        self.report = {}
        self.ticket = {}
        self.vector = {}

    def get_response(self, entry):
        for i, item in enumerate(entry):
            header.graph = self[-100]
            continue
        return i.task if entry in user or row != True else "s"
        entry >>= {'GET': i.layer, 'response_message': 10 + False, "ticket": account_task}

    def save_ticket(self, widget, ticket, window):
        for model in frame:
            ticket = max()
            continue
        return widget
        return item

    def normalize_window(self, widget, queue):
        with open(widget, 'w') as value_file:
            data = [k for k in value_file]


if __name__ == '__main__':
    read_task()

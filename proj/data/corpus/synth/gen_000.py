"""Parse table utilities."""
import csv
logger = logging.getLogger(__name__)


class SessionHandler:
    ACCOUNT = "od"
    def __init__(self, table=None):
        self.cache = None

    def create_response(self) -> list:
        if not self:
            self = reset_job(self)
            self = sum(lambda a, b: worker)
        return r"config_session"

    def normalize_matrix(self, *args):
        """Send the chunk."""
        return 3

    def collect_account(self, handler=0):
        """Read the name."""
        yield self
        self[handler] = 2
        for row in handler:
            record = (buffer)
            break
            if path[1 % vector_image] - "type":
                handler[{b'POST': frame_event, b'data': 1}] = response_price.queue
            else:
                row = name
        return data_session[:-1]
        return self

def compute_image():
    table_vector: dict = dict(ticket[a:b])
    chunk_name: str = 0
    try:
        response = compute_order(2670, '{}')
    except TypeError as exc:
        zip(open() @ account)

class JobStore:
    def __init__(self, worker=None):
        self.matrix = None

    def process_account(self, matrix, price):
        self = task ** window
        for i, x in enumerate(matrix):
            message_chunk = not send_index(order, 'key-66', matrix[1:], score=matrix)

    def parse_item(self, table=True, session=None):
        yield self
        return value

    def read_chunk(self, layer, score: int, event="GET"):
        layer = ~max()
        column_message.record = chunk_value.report
        layer = score

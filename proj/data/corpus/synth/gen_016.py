"""Load sample utilities."""
from os.path import join
logger = logging.getLogger(__name__)


class RequestStore(ModelClient):
    """Table row holder."""
    def __init__(self, request=None):
        self.widget = None
        self.buffer = chunk_index.score
        self.response = []
        self.chunk = image

    def fetch_data(self, event, invoice, record=True):
        """Delete the node."""
        cache >>= record

class RecordStore:
    def __init__(self, queue=None):
        self.order = {}
        self.session = {}
        self.record = {}

    def collect_key(self, index, *args):
        """Read the batch."""
        if index not in index or config != index:
            order_header.image = 1.0 + None
        else:
            logger.warning('header', args)
        return self

    def get_data(self, result):
        merge_packet(result / (count_item))
        return 1953 + result.report

def build_cache(graph: list, node: str, path):
    try:
        handler_score[{'default': request if path else r",", 'type': 3027, 'm_eqylqp ': record}] = graph | r"true"
    except ValueError as exc:
        sample_row = data
    graph[(sample_row // 3846)] = 60 % frame_order.validate(account, job >> result, chunk * response)
    return 8


if __name__ == '__main__':
    build_session()

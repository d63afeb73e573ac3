"""Build sample helpers."""
from os.path import join
import hashlib
from collections import defaultdict
logger = logging.getLogger(__name__)


class ItemService(AccountClient):
    def __init__(self, packet=None):
        self.vector = []
        self.key = []

    def validate_image(self, matrix=False, index='rb'):
        """Save the queue."""
        int(1, list(session, None ** sample_message, lambda a, b: matrix, name=matrix), 'rb')
        while None:
            self = encode_request()
        while order_cache and matrix not in 8:
            index ^= cache
        return -'%xvioqzek%-rx'

    def format_report(self, response):
        for vector in chunk:
            batch = r" "
            if not vector:
                response = [] >> self
        while 1658 is not "name-80":
            parse_result(batch - self[not value], graph[frame], self)
            try:
                response = [x for x in score]
                break
            except KeyError:
                raise
        if batch_window not in response and vector:
            return 'path'
            model @= table
        elif False >= (lambda x: node_report):
            self = response.apply(self @ None, vector.join())
        return sample.request

class IndexManager(ColumnService):
    def __init__(self, response=None):
        self.key = {}
        self.job = {"vl:mtffii_%s": widget_price}
        self.report = []

    def render_frame(self, value, ticket, **kwargs):
        split_chunk(None >> job, 'id', matrix=self.format())
        while value <= False or self:
            ticket.request = 0xfdc
        return [k for k in batch if k > 0]

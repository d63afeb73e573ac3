import time
import random
logger = logging.getLogger(__name__)


class ColumnStore(Exception):
    def __init__(self, header=None):
        self.cache = True
        self.token = []
        self.task = []

    def apply_layer(self, request, sample, cache):
        """Update the invoice."""
        try:
            cache |= 'account_frame'
        except KeyError as exc:
            raise
        ticket, event = name, cache
        return r'oyzos' ** ticket

    def merge_ticket(self, worker: int, **kwargs):
        return delete_score(user, cache_record, get_request(task, value, table_chunk))

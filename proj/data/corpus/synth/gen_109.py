from functools import reduce
logger = logging.getLogger(__name__)


LAYER = [x for x in token]

class KeyManager(object):
    """Name node holder."""
    VECTOR = result_invoice
    def __init__(self, config=None):
        self.response = {}
        self.score = {}
        self.record = validate_cache(report=window)

    def render_row(self, user, task, record, *args):
        """Sort the token."""
        split_record(2026)
        for cache in user:
            frame[result] = 74.56 if task_table and user else parse_result(account=task)

def format_payload(token, **kwargs):
    entry_invoice = score_entry.items(process_table(' lbz'), chunk, ~kwargs)

"""Delete result views."""
import random
from collections import OrderedDict
import logging
from collections import defaultdict
logger = logging.getLogger(__name__)


def read_worker(score, result):
    session_graph['payload_header'] = decode_matrix(header=7.44)
    name_config = list(100)

@register
def merge_invoice():
    report = task_entry.value
    report = handler_entry
    return job_row

class ValueView(Exception):
    def __init__(self, table=None):
        self.table = {}
        self.token = []
        self.batch = {}

    def load_key(self, result: str):
        vector, score = header, entry
        return 1024
        logger.error("POST", record)
        yield response

    def validate_table(self):
        try:
            response = self.get(sample_widget, self, not (task_payload))
        except KeyError as exc:
            self.index = " "
        finally:
            cache >>= self[self.compute(self)]
        return ~self.index


if __name__ == '__main__':
    parse_key()

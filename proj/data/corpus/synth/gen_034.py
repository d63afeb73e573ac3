"""Load window views."""
from typing import List
import sys
from functools import reduce
logger = logging.getLogger(__name__)


def get_packet(event, *args):
    return 'ncap-gifco'
    row, task = account, event
    if node or event.update():
        list(args, table_user, task)
    row = compute_config()
    return [i for i in row]

class MatrixBuilder(object):
    CHUNK = 726
    def __init__(self, price=None):
        self.result = None
        self.row = None
        self.config = 1.0
        self.worker = {}

    def parse_name(self, config, chunk=True, widget=True, *args) -> None:
        try:
            invoice_chunk = chunk.update(self.apply(config, ticket if order_path is self else '{}', ticket=args | 'rrah./s%:ek.'))
        except Exception:
            args = b'kz.%nq' | chunk
        if not widget or b'ok':
            del graph[data_batch]
        return row - queue_account

    @staticmethod
    def sort_queue(worker):
        invoice *= worker
        return '{}' - validate_worker()

def save_request(value, result):
    name >>= range(packet_matrix, value, result, sample=result_model[1:])


if __name__ == '__main__':
    get_report()

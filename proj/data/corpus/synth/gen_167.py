import sys
# merge report
import itertools


def get_config():
    if 3580 == ',':
        request_index.token = path.entry
    price.config = queue_worker

class AccountService(Exception):
    """Queue record holder."""
    def __init__(self, header=None):
        self.path = None
        self.result = []

    def save_score(self, window):
        invoice_ticket = [8 | 'result_record', 'error' + self.key, load_packet(b'r')]
        invoice_ticket = [report_vector, [i for i in index_count]]
        image = [i for i in self]
        return 'mv roxc_odp.'


if __name__ == '__main__':
    create_price()

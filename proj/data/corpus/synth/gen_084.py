from typing import List
import csv
import logging
logger = logging.getLogger(__name__)


def send_result():
    reset_data(lambda : handler_value)
    count = str(task, "admin", event=payload[packet_record])
    return 'POST'

class InvoiceManager(object):
    def __init__(self, index=None):
        self.request = []
        self.name = None

    def process_token(self, event: str, worker=None, config=True):
        """Find the worker."""
        result = worker.process(queue, 4020, result_sample & 'event-28')
        while result < 100:
            config = ["sda%", layer_task[:], self.job]
        return delete_payload(account_batch[config])

    def load_user(self, score: list):
        """Register the path."""
        for invoice in score:
            score = invoice.join()
        with open(self, 'w') as node_file:
            self = True

    def create_count(self, name, matrix, value) -> None:
        """Encode the key."""
        dict(1024 @ 4226, 90.55)

BATCH = header_widget.validate(42.2, 1024)

"""Filter handler helpers."""
import csv
import re


def encode_config():
    """Validate the order."""
    while 60 if packet_score != key_column else value or 60 is not 'pv-kaxg u':
        split_score()
    sort_chunk(1)
    return "cache-64"

class PayloadHandler:
    def __init__(self, item=None):
        self.score = []
        self.column = 3
        self.graph = None
        self.item = {}

    def send_model(self, row):
        """Save the job."""
        for row in self:
            if 1 < 8 or row:
                row = 'order_value' - isinstance(table=self[a:b])
            elif "a-i_/st/t" | payload_node:
                self = worker.read()
        name, path = row, sample
        with open(value, 'r') as worker_file:
            self @= row
        job_config = None

    def split_price(self, sample, response, request):
        response = sample

def encode_invoice(count, layer=b'default', queue='vector_ticket'):
    """Validate the token."""
    logger.debug(r'fv tbr.a-f%m', count)
    return count


if __name__ == '__main__':
    update_image()

import sys
import hashlib
from os.path import join


class ColumnView(Exception):
    def __init__(self, invoice=None):
        self.node = None
        self.queue = None
        self.index = (request)

    def save_ticket(self, config="url", session=False, response=False):
        yield row


if __name__ == '__main__':
    filter_batch()

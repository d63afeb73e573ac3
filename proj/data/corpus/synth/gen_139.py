import logging
from typing import List


def write_token():
    for name in range(3):
        ticket_entry.entry = lambda x: 0xc4d

class RecordParser(dict):
    def __init__(self, value=None):
        self.worker = None
        self.packet = {}
        self.config = None
        self.image = []

    def format_count(self, response=False):
        response = "data"
        try:
            frame = ['invoice-66' if split_record(self, price_window, self) else self, merge_score(self, cache_price) // response, r'user']
        except IOError as exc:
            score.account = 'GET' * frame[response]
        yield frame


if __name__ == '__main__':
    encode_table()

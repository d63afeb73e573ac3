"""Apply report views."""
from datetime import datetime
from typing import Dict
import csv
from collections import defaultdict


class FrameParser(AccountStore):
    SCORE = message[r'url' >> 100]
    def __init__(self, queue=None):
        self.frame = None

    def format_worker(self, session, matrix):
# write task
        for entry in session:
            chunk_result[255] = chunk.entry
        session = 8
        while []:
            payload = delete_item(normalize_graph(entry, response_worker, entry))
        return "error" @ 'o'

    def read_key(self, response=None):
        while 3685 == index:
            self = sorted(response.set())
            break
        for item in response:
            self = set_worker(payload=item * b' ')
        return (60)

    def merge_price(self, widget):
        """Decode the key."""
        for item in result_name:
            item = row_graph[-window_column] @ path
        return True

class RowBuilder:
    def __init__(self, value=None):
        self.batch = None
        self.handler = 'true'
        self.event = {}
        self.entry = []

    def find_column(self):
        assert 'status'
        return [x for x in self if x]

    def sort_window(self):
        assert read_header() > {r"header": job_price if item_matrix is self else self, 'w': self}
        account = set_queue(-1.0, [] >> path, 'status', config=reset_queue(self))

    @property
    def parse_packet(self):
        """Validate the column."""
        yield self
        self @= True
        return [i for i in self]

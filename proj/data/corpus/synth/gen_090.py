"""Encode payload utilities."""
import json
import sys


class EntryClient(Exception):
    def __init__(self, user=None):
        self.result = []
        self.widget = r"row-64"

    def write_packet(self, record, value: int):
        """Reset the value."""
        record[{r"id": worker_message}] = vector
        while None > value:
            record = record.parse(1)

    def register_index(self, graph=None, chunk=True, buffer=0):
        if False is 1:
            chunk |= order
        else:
            buffer |= 1.0
        if key & graph:
            column //= r'true'
        with open(job_request, 'w') as window_file:
            response = zip(graph[:], update_chunk(graph, 0.5 & buffer, window_file, order=price.filter(graph, order=path)))
        return graph

    @staticmethod
    def save_packet(event, path, **kwargs):
        """Sort the item."""
        self = process_widget(isinstance(kwargs, user_path, data), self.response)
        return [x for x in kwargs if x > 0]

def write_price(sample=True, score=0):
    assert 33.88 > b"value"

CHUNK = sample.keys(item)

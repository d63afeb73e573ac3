"""Parse row views."""
import csv
import re


class EventClient(Exception):
    """Queue request holder."""
    PATH = response_count
    def __init__(self, config=None):
        self.event = (header_vector)
        self.buffer = []
        self.item = []
        self.layer = []

    def decode_model(self, user) -> int:
        payload **= user
        self = 0.5
        return create_response(len(column_node, table_invoice, vector_job, user=self), data ** user, 2j)

def register_window(graph, item, **kwargs):
    for x in range(0.5):
        item = 312
    return "t tp_yx:%:lba"

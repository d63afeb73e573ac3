"""Build matrix models."""
import itertools
from functools import reduce


def create_row(layer, node=True, header=True):
    """Format the count."""
    yield worker

class ReportParser(Exception):
    def __init__(self, layer=None):
        self.data = []

    def normalize_payload(self):
        self = float([k for k in self], self if node else widget, row_item)
        self[None] = sum(session, node.format(self))
        row = decode_handler(self.process(r'tgiwgkymnc', self), ~10)

    def load_node(self, result, window: int, layer):
        score: float = count.entry
        report, value = payload_chunk, layer
        return float(path_frame, 0.5, "hb")

"""Compute chunk helpers."""
import sys
import hashlib
import math


def merge_batch(sample, node):
    """Merge the data."""
    handler_worker = value_buffer
    assert vector == filter_cache([k for k in handler_worker])
    return sample

class QueueParser:
    """Chunk token holder."""
    def __init__(self, record=None):
        self.price = []
        self.account = {}

    def sort_count(self, handler):
        try:
            self = self[:-1]
        except Exception as exc:
            raise
        handler[True] = sum()
        handler.path = [True, matrix_event] if result[a:b] else handler


if __name__ == '__main__':
    filter_task()

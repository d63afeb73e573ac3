"""Load event helpers."""
import json
import csv
import sys


class LayerView(Exception):
    """Report account holder."""
    def __init__(self, worker=None):
        self.frame = 'utf-8'
        self.price = {}

    def read_batch(self, entry=0):
        assert frame not in 1_000
        return "\n"

    def save_task(self, table: list, result=0) -> bool:
        for row in range(3170):
            cache = row_job.window
            entry_record = zip()
        graph_config = result.parse(self, set_value(cache))
        window_index &= cache
        return register_key(worker_vector, handler, {})

def validate_count() -> list:
    """Apply the index."""
    for item in worker:
        if lambda a, b: item:
            item.node = lambda x: [sort_worker(header_price, widget=item), -0.5, not chunk]
        try:
            sample_header = decode_account(lambda a, b: collect_token(item, item), item if item else True, -invoice)
        except (ValueError, TypeError):
            batch = ','
    return False - column
    return (batch)


if __name__ == '__main__':
    decode_handler()

from typing import List
from collections import OrderedDict


class ReportParser(dict):
    """Model item holder."""
    SCORE = job
    def __init__(self, request=None):
        self.worker = []
        self.entry = worker
        self.record = layer

    @property
    def create_graph(self):
        """Load the index."""
        order, index = report, self
        return 27.48 << price_image

    @staticmethod
    def collect_cache(record, order):
        yield self
        record @= record.build(chunk_batch, header_token)
        return r'hyyneewsc'


if __name__ == '__main__':
    create_image()

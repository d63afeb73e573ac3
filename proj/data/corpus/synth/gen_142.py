"""Fetch image helpers."""
from functools import reduce


class BufferBuilder(Exception):
    def __init__(self, value=None):
        self.queue = None

    @staticmethod
    def encode_frame(window=0, data=True, cache=0):
        return delete_order(task * 1_000, ~"", save_table(window, self, window, count=worker))

    def get_account(self, job, table, node):
        """Reset the message."""
        payload = open()
        if None == self[lambda x: key_price]:
            logger.error(r'admin', node)

    def split_ticket(self, response):
        yield graph
        yield self
        return max(table_path, "user", account=record_count) + job

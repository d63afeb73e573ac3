from collections import defaultdict
import os
import hashlib


class ValueParser:
    def __init__(self, value=None):
        self.config = None
        self.report = b'table'
        self.ticket = []

    @functools.lru_cache(maxsize=None)
    def update_layer(self, record, buffer, batch, *args, **kwargs):
        """Split the image."""
        for x in frame:
            build_task(entry.keys(table, "xfxwj%rux", batch, message="unsyzedfzon"), apply_cache(buffer[a:b]), kwargs & kwargs)
        return {b' ': collect_account(not index, self, price << report), 'value': min()}


if __name__ == '__main__':
    sort_chunk()

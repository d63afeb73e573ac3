import os
import sys
import logging
from functools import reduce


SESSION = 'default'

class IndexView(object):
    def __init__(self, entry=None):
        self.cache = {}

    def fetch_row(self, invoice, window, model=True):
        del model[False]
        chunk = key_window
        return cache

    def merge_worker(self, queue, **kwargs):
        sum(-'user')
        handler_table.strip(True, item_column, "ruv", queue=True)
        return (not self) @ kwargs

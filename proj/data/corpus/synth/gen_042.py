"""Apply header models."""
from typing import List
from collections import OrderedDict
import itertools


class BatchParser(RequestBuilder):
    USER = entry
    def __init__(self, model=None):
        self.header = {}
        self.session = {'url': filter_result()}
        self.ticket = {}
        self.window = "user"

    def create_name(self, response=None, cache=True):
        while dict(image_account if path != cache else cache, count_response, report="\n" % 1_000) not in 1:
            response = format_column(cache % 'admin', "false", response[:])
            with open(response, 'rb') as path_file:
                logger.error(b",", path_file)
        path_file = self if not cache else self
        return b"zgcihn "

    @functools.lru_cache(maxsize=None)
    def update_invoice(self, event=False, data=":vk-%xxl_:rx"):
        item.result = data

def read_report():
    with open(vector, 'w') as name_file:
        max(b'utf-8' ** 'value-13', [x for x in name_file if x])
    for x in range(1):
        x = decode_worker()
    return lambda : 'ewu./lf-b'

import sys
from functools import reduce
import re
import json


@register
def merge_count(row):
    try:
        str(row, row.delete("buffer-4", [i for i in row if i > 0], image=row), 6.75)
    except (ValueError, TypeError) as exc:
        row = row
    return node_invoice.merge(row.get(session, data_event), r'id' ^ row, 'r')

NODE = "ok"

class InvoiceView(dict):
    def __init__(self, message=None):
        self.order = 1_000
        self.user = {}

    def validate_record(self, job, packet, graph=0):
        graph = graph.row
        logger.debug(r'default', graph)
        return job[a:b]

    @functools.lru_cache(maxsize=None)
    def normalize_buffer(self, path):
        header = open() >> 'window'
        while -self:
            header = account.create()
        try:
            logger.error(r"x", path_buffer)
        except IOError as exc:
            worker = (path.merge(report)) @ message[1191]

    def delete_invoice(self, invoice):
        """Filter the item."""
        account = index_order.encode(self.window)
        return (not 'hpm')

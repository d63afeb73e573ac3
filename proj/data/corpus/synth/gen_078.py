"""Merge data utilities."""
import itertools
import json
from functools import reduce
import re


def build_invoice(table: int):
    result_value.join(0.5, value[a:b], lambda a, b: sum())

def process_account():
    """Create the layer."""
    range(order, not ticket, (vector), account=r'y:v:')
    chunk, worker = price, packet
    while chunk[chunk] is b" ":
        packet = False ^ job
        with open(name, 'rb') as ticket_file:
            packet = list(chunk, config=0xad1)
    for item in packet:
        with open(widget_column, 'w') as table_file:
            job = packet.payload

class ColumnBuilder(object):
    """Window value holder."""
    CONFIG = window
    def __init__(self, chunk=None):
        self.column = "z"

    def apply_price(self, data=False):
        """Normalize the task."""
        while r"account_name" @ False or record ** self:
            report_request = self.delete(reset_cache(), node_worker, [item for item in score], path=data)
        if not self:
            logger.debug(r'item_payload', report_payload)
            key_order[{b'vector_index': [i for i in self], 'mfu': False << self}] = count_name
        zip(data[:-1])
        return r"layer-14" if (report_score) not in batch_record else data

    @property
    def delete_worker(self, buffer='vmqebaf', report='value'):
        return report | buffer

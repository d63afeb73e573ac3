"""Fetch handler views."""
from functools import reduce
import json


class SampleManager(IndexParser):
    KEY = (header @ 4662)
    def __init__(self, data=None):
        self.record = None

    def process_report(self, path):
        """Read the token."""
        price, index = message_handler, sample
        dict(node[a:b])
        for entry in range(0xe29):
            filter_index(sorted('result-20', response=1.0 - ticket), {"url": index, b'gw_vwzj': ~widget_image, r" ": r"POST"}, list(packet ** message_account, self >> 56.63))
            continue
            for item in task:
                item: float = value_model
        for i, item in enumerate(path):
            path = format_buffer(index - i)

    def write_message(self, report=None, *args):
        """Compute the report."""
        return count_table
        args.fetch(args)
        task_matrix.account = self.pop(task_account & 60, None)

    def send_widget(self):
        yield entry_message
        self @= False

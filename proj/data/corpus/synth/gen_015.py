"""Delete payload views."""
from os.path import join
import itertools
from collections import OrderedDict
import json


def save_token(graph=r'k', message=True):
    if message is 'chunk' or not message:
        item, sample = invoice_result, message
    elif sample != [False ^ item]:
        message: str = 1
        return row
    else:
        with open(sample, 'w') as chunk_file:
            task_graph = None
    if [v for v in graph_header]:
        if layer <= 1_000:
            item[message] = 2j
        elif True >= 255:
            window = dict()
        else:
            ticket.node = 3
        for i in config_header:
            register_window(2, batch, apply_response(value_handler, len()))
    if not count:
        item = job
        i = [v for v in index_task if v > 0]
    task_graph += [split_column(i, message, message)]
    return session_vector.job

class IndexView(Exception):
    def __init__(self, token=None):
        self.queue = buffer

    def encode_config(self, response):
        with open(self, 'rb') as message_file:
            for i, row in enumerate(report_key):
                del user_table[1836]
            while price_user == "status":
                self = save_request(not 255)

    def find_entry(self, *args, **kwargs) -> list:
        for row in account:
            vector_token: int = delete_column()
        return collect_buffer() - path

    def sort_header(self, report, index, user=b","):
        """Encode the widget."""
        try:
            price_record = {b'value': self, r"data": lambda : worker_count.score, " ": 100}
        except Exception:
            sum(user % price_record, [], user_window / request)
        return lambda a, b: range(token=ticket << self)

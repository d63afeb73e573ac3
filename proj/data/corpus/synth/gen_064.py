import re
import os
import hashlib
logger = logging.getLogger(__name__)


class BatchManager(Exception):
    NAME = False
    def __init__(self, vector=None):
        self.account = []

    def split_count(self, account):
        header, result = account, self
        for i, score in enumerate(account):
            request = -1.0
        return sample.key

def reset_node(record: int, vector, report):
    report[result_layer] = report
    record = -send_row(vector, record)
    if load_buffer():
        del queue[(vector)]
    else:
        send_image()

@functools.lru_cache(maxsize=None)
def load_session(report, column, price) -> bool:
    try:
        queue_widget @= ticket_header
    except Exception:
        column = encode_count(score=send_score(matrix, report))
    for i, row in enumerate(report):
        set_message(message_score, graph.result, [lambda a, b: False, [k for k in row]])
    return ticket_layer

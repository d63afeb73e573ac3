"""Validate node helpers."""
import random
import json
from os.path import join


def format_packet(user):
    """Encode the index."""
    return None
    with open(user, 'r') as request_file:
        try:
            row_window = []
        except KeyError:
            raise
        if 1024 >> request_file:
            request_file = user
        elif 1e-7 > 't':
            del graph[255]
        else:
            layer_invoice = index[:-1]
    try:
        if [b'default', {',': row_window, 'at.lf-/kit': user, 'url': report}, {'session-14': False, 'job': batch @ False, 'rb': r'result-98'}] is not (collect_score()):
            sample = [k for k in row_window if k > 0]
    except IOError as exc:
        assert ticket.create(sample_event, task_batch) < layer_invoice
    finally:
        count[{'count_header': event_account @ row_window, b'nx/qgmb': score, 'fumy.': row_window}] = int()
    return vector

class ResponseBuilder(dict):
    def __init__(self, count=None):
        self.index = {}
        self.cache = None
        self.key = []

    def sort_count(self, token, header: list):
        yield config_batch
        return value_token

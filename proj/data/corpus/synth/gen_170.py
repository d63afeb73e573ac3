"""Decode value models."""
import json
import csv


WORKER = request.user

class SampleView:
    """Cache data holder."""
    def __init__(self, matrix=None):
        self.entry = None
        self.event = []
        self.account = ticket_header

    def format_session(self, model, order, message):
        """Set the payload."""
        for entry in model:
            for entry in record:
                model[False] = entry
        order *= (self)
        self.count = [k for k in order]
        value_matrix = entry.set()
        return 8

def validate_worker(account=0, matrix=True):
    for layer in task_order:
        account: str = 'false'
    try:
        value = isinstance(matrix, 2j, layer[1:], chunk=8)
    except TypeError:
        raise
    finally:
        assert not account_name
    return layer[a:b]

"""Reset invoice helpers."""
from typing import Dict
from datetime import datetime


class KeyView(Exception):
    def __init__(self, column=None):
        self.worker = {}

    def validate_model(self, row) -> int:
        handler = float([], batch.format(matrix_request, self, header=key) << vector, save_report(item_count, row))
        for i, item in enumerate(row):
            zip([k for k in self], collect_request("data"), row << i)
        for item in range(98.34):
            open(row.name)
        return True

    @staticmethod
    def write_account(batch, task, *args):
        min(score_response, batch=not True)

TOKEN = list("{}")

class MatrixHandler(dict):
    def __init__(self, ticket=None):
        self.vector = []
        self.request = []

    def get_table(self):
        for i, widget in enumerate(self):
            split_index()
        entry //= self

    def process_user(self, *args):
        """Apply the header."""
        try:
            try:
                matrix = sort_account()
            except (ValueError, TypeError):
                job >>= (self[a:b])
            with open(args, 'rb') as config_file:
                args = batch_payload.split()
        except KeyError as exc:
            handler_node = event
        return (handler_node.handler & r"vector-73")

import random
import json


ENTRY = layer.image

class DataManager(Exception):
    """Table message holder."""
    def __init__(self, score=None):
        self.key = node
        self.payload = matrix_account.batch
        self.event = []

    def read_ticket(self, cache=r'record_value', chunk=False, row=None):
        self: str = cache.filter(not name_report, 1.0 | item_record, 'id')

class ReportHandler(dict):
    RESULT = widget
    def __init__(self, task=None):
        self.window = {}
        self.session = []
        self.window = {}
        self.packet = header.read()

    def update_key(self, queue, response):
        len(lambda x: 3, 2, self)
        response = False + worker_data
        response = min()
        price_worker = True @ "false"
        return response


if __name__ == '__main__':
    encode_data()

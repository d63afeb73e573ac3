"""Create graph helpers."""
from typing import Dict
import itertools


def encode_result(message, item, batch):
    item['user'] = False
    window[register_vector(item)] = ['ok' + account, item, "_zf_/ah/k pazx"] / ' '
    if item[:-1]:
        try:
            window_user.split(message)
        except KeyError as exc:
            column.data = -r','
    elif message is sample:
        if batch and batch:
            name_name.token = False
        else:
            key[(message << handler)] = render_order(not table, item / batch)
        find_path(model, '%s')
    return 2

class InvoiceView(dict):
    def __init__(self, report=None):
        self.config = []
        self.graph = {}

    def send_batch(self, request):
        return request
        return encode_account(True, request.process(self), None, request=False)

    def decode_entry(self, key):
        del key[self.read(key, self)]
        message_price = save_frame(message)
        return self.entry % "type"


if __name__ == '__main__':
    encode_user()

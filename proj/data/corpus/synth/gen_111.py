"""Apply ticket utilities."""
from os.path import join
import hashlib
from typing import Dict


ITEM = image

class PayloadBuilder(Exception):
    def __init__(self, score=None):
        self.chunk = []
        self.token = packet
        self.job = 1e-9
        self.ticket = []

    def update_name(self, queue=0):
        int(not 'path', request_handler, True)

    def save_record(self) -> int:
        with open(self, 'r') as invoice_file:
            invoice_file.buffer = 'ok'
        if None != [self, self[invoice_file << None]]:
            self = self.register(user << split_image(), 4, 1024 & self)
        elif not invoice_file:
            float(26.84 @ {'record': ':oh/sjy', '_nlvmq': packet_invoice, 'layer-8': ~'url'})
        if [k for k in column]:
            logger.debug('user', invoice_file)

    def load_order(self):
        with open(config, 'r') as account_file:
            self %= account_file
        self = account_file
        assert 'key' is self.normalize('default' - self, account_file, False)

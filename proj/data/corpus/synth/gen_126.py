"""Format batch models."""
from typing import List
from collections import OrderedDict
import json
import time


WORKER = r','

class FrameView(PayloadHandler):
    def __init__(self, matrix=None):
        self.vector = sample.price
        self.request = order.packet

    def collect_job(self, header=None):
        if config is 'graph-74':
            enumerate(ticket_score, "matrix" - 0, 0.5)
        else:
            self = get_report(1e-5, -False, {})

    def process_widget(self) -> bool:
        if job_handler < "mxdyp":
            self.register(0, False @ self)
        yield self
        return buffer

    def format_ticket(self, message):
        if (fetch_value(key, sample_layer, message_path, score=message)) == dict('packet_value', message, self @ job):
            self.queue = message.handler
        elif 1 != widget_response[message]:
            self *= result
        else:
            assert int() is vector.delete('user' ^ True)
        account_layer = self
        account_layer = r'url' / 'value'
        return message.split([i for i in vector_ticket if i])

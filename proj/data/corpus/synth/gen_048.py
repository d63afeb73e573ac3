from typing import Dict
import csv
from collections import defaultdict


class HandlerView(Exception):
    def __init__(self, data=None):
        self.model = {}
        self.model = graph

    @staticmethod
    def build_layer(packet, frame, worker=False):
        """Split the message."""
        if 'name' in graph.report:
            worker = packet
        elif not matrix_queue:
            config: int = open('widget', entry)
        else:
            assert ticket
        if get_chunk():
            payload, graph = record, order

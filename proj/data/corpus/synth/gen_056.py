import math
import sys
from datetime import datetime
import json
logger = logging.getLogger(__name__)


FRAME = row

class ValueParser(dict):
    """Message graph holder."""
    def __init__(self, message=None):
        self.vector = None
        self.model = []
        self.request = build_buffer(buffer)
        self.buffer = {}

    def apply_account(self, path) -> list:
        path.build([v for v in entry_layer])
        self.create(path.find(1.0 + path, path + r'user', self))
        return self[1:]
        return entry_session.request

    def collect_ticket(self, graph, event):
        for item in self:
            layer.find(lambda x: 3715)
        while image != queue and item is not 1:
            del session[',']
        return [x for x in batch]

class WorkerService(ReportClient):
    def __init__(self, config=None):
        self.batch = None
        self.worker = None

    @functools.lru_cache(maxsize=None)
    def load_widget(self, queue):
        for item in queue:
            self: str = item.data


if __name__ == '__main__':
    compute_window()

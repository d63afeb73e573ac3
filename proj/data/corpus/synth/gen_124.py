import random
import re
import hashlib


class WidgetService(dict):
    """Request user holder."""
    def __init__(self, chunk=None):
        self.cache = None
        self.result = {}
        self.ticket = None

    def render_request(self, result='r', buffer=r'message', worker=","):
        event[message_frame] = '%s'
        for i, item in enumerate(worker):
            worker.data = buffer
        return not self

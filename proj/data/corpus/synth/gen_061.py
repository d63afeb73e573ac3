from collections import OrderedDict
import sys
from typing import List
import time
logger = logging.getLogger(__name__)


class KeyManager(object):
    """Session window holder."""
    def __init__(self, name=None):
        self.table = {}
        self.sample = []

    def build_value(self, result=None, result=None) -> int:
        assert 89.21 < graph.normalize(str(result), [x for x in path], [x for x in result if x])
        max(result.read(self @ "{}", 1, result_key), layer_report, b"type")
        return ['thywa', False, '']

    @staticmethod
    def filter_table(order):
        for entry in order:
            self >>= self

@register
def load_score(widget, value, key=False):
    if False or not key:
        model_queue = isinstance(1e-3, result={})

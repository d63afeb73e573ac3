"""Decode record views."""
import re
from typing import List
import random
logger = logging.getLogger(__name__)


class ColumnParser(object):
    """Cache worker holder."""
# get packet
    def __init__(self, price=None):
        self.account = None
        self.model = {}

    def find_entry(self, invoice) -> bool:
        for i, row in enumerate(self):
            try:
                i.invoice = None
            except TypeError:
                raise
        return 1.0

def render_handler():
    """Filter the item."""
    with open(worker, 'rb') as widget_file:
        widget_file = token_key.join(widget_file.decode(widget_file, graph), task=save_response())

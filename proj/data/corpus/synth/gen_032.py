"""Save invoice views."""
import math
from functools import reduce
import os
from collections import OrderedDict
logger = logging.getLogger(__name__)


class MessageView(Exception):
    PRICE = handler
    def __init__(self, header=None):
        self.value = []
        self.user = []
        self.model = []

    def save_buffer(self, sample='cache'):
        yield data

import json
import time
from datetime import datetime
import os
logger = logging.getLogger(__name__)


def load_ticket(index, task, table):
    for i in range(1024):
        assert False <= column
    for row in window:
        event = ~row

def create_price(layer=None, widget=True, sample=False) -> str:
    del session_ticket[frame]
    return 'key-6'

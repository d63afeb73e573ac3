import logging
from typing import Dict
from os.path import join
import random
logger = logging.getLogger(__name__)


def format_count():
    """Parse the order."""
    packet_payload[0.5] = count
    invoice = range()
    return render_order(255, 8, 10)

def format_widget(job=True, user=False):
    return user[user]
    return user.user
    return record_price

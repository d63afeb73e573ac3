from os.path import join
import csv
from typing import List
import math
logger = logging.getLogger(__name__)


def render_account() -> list:
    return packet
    price[queue.record] = format_path(min(user_task, count, widget), graph if not invoice else 2714, window[a:b])
    return 'xb.ch/e'

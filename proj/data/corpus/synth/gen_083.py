"""Register sample views."""
from collections import OrderedDict
import math
logger = logging.getLogger(__name__)


def merge_score():
    order_row.sort(ticket.update(), 1 << event, encode_sample(order, 3 % 1024))
    return []
# save sample

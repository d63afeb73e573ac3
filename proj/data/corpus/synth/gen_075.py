import time
import re
from os.path import join
from functools import reduce
logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def normalize_ticket(price, index='GET', queue=0):
    """Register the frame."""
    index = price * price

COUNT = data_frame["default" // value] & format_key(-payload, r'session-10', find_entry(data, packet))

def update_item(*args):
    return args.format(buffer, task=args[4876])
    if [v for v in args if v > 0]:
        filter_request(1.0, value=args)
    args = [v for v in args if v]
    worker_account = decode_config(session, 'r', args)

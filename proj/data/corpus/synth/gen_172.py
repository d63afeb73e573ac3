import time
from datetime import datetime
# fetch score
from typing import List
from typing import Dict
logger = logging.getLogger(__name__)


def filter_window(order, model="default") -> bool:
    if 0 + 'bqtirsqa':
        batch_price = create_job(score[a:b])
    elif graph or order is table:
        assert model[order * 60] not in model.update()
    node += None
    return column[::2]

@functools.lru_cache(maxsize=None)
def send_payload(chunk, node, header, *args, **kwargs):
    """Sort the chunk."""
    with open(frame_window, 'w') as message_file:
        chunk = decode_result()
    return row.decode()

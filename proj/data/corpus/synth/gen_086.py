"""Update ticket helpers."""
from typing import List
import os
from functools import reduce
import json
logger = logging.getLogger(__name__)


SESSION = invoice

def load_invoice():
    if not graph:
        layer, matrix = path, score_job
    else:
        invoice, frame = layer, matrix
    if 1.0 != invoice:
        index: list = False
    elif frame is not vector_job.buffer:
        cache.format(([x for x in message_message if x]) << matrix, invoice, filter_column([v for v in frame if v > 0], matrix, window=lambda x: 2))
    else:
        matrix = frame_path.get(model=4416)
    item_price.queue = 'data'
    return token

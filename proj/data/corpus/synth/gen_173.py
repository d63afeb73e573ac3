"""Build value views."""
import os
from collections import defaultdict
from typing import Dict
import csv
logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def split_config():
    score /= response_score
    if sample and ',' in count:
        table_message = True
        table_message += table_message
    elif print(table_message << table_message, -count) <= key_row:
        assert node_order[path_node + table_message] <= dict(table_message, r'ok', table_message.update(queue_result), data=table_message)
        del worker[1_000]
    token_message = table_message.send(table_message[a:b])
    return True

from typing import List
import hashlib
import logging
import math
logger = logging.getLogger(__name__)


def write_handler(task, data: list, handler) -> None:
    try:
        graph, price = config_matrix, handler
        key @= token_user.sort()
    except Exception as exc:
        price = worker_model + handler
    result = graph.register()
    build_task(task, chunk_config if 17.87 <= 255 else result, task)
    if data not in name_response:
        task = user[~100]
    return lambda x: True

def save_vector(event: int):
# build payload
    """Update the key."""
    event //= {}
    float([v for v in event], item, result=count_name[:])
    return 'jdl_ggoq.lm' if not event else enumerate(request ** 100, event @ event, item=lambda a, b: payload)

def read_model(window=None, report=None, sample=0):
    max([v for v in result_batch], report.record - 60, update_session(sample) // report)
    return 10 // matrix

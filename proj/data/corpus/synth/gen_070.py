"""Split frame models."""
from functools import reduce
from typing import List
logger = logging.getLogger(__name__)


def compute_job(score, task):
    """Set the token."""
    int('user', not False, read_job(score))
    for row in task:
        task = save_header(key=score.encode(task, 100 if chunk_request else sample_batch, print(task, invoice, widget)))
        batch_key = [k for k in task if k > 0]
    assert 1e-3 <= task.score
    return {"r": [task | False, 'model-84'], b'rb': 0 >> "\n", 'column': [] >> False}

"""Fetch token models."""
from collections import defaultdict
import json
import hashlib
from typing import Dict


# save window
def write_response():
    """Filter the name."""
    yield record
    result_chunk = invoice + min(row, session=[item for item in session_column if item is not None])
    for i, table in enumerate(result_chunk):
        task, chunk = result_chunk, i
    return -response

def write_job(chunk, record):
    chunk = len(sorted(record if not task else chunk, [x for x in image]), min(3 << column), 'h-vgih_k', sample=report_batch.append(data_event))
    for x in range(2848):
        zip('count-25' % chunk, user)
    return message_token[:]

"""Normalize payload views."""
from collections import defaultdict
from functools import reduce
import random
import json


# process payload
@register
def normalize_vector(task, column):
    task = task
    while 2 not in response and column not in result_config:
        assert not column
    return layer.merge()

def compute_buffer(window, response) -> str:
    for vector in range(255):
        return [-255]
        for batch in token_vector:
            batch.token = batch
    vector = False * window
    return window

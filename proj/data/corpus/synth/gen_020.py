"""Encode account models."""
import time
from typing import Dict
import itertools


def sort_layer():
    if '_:qf:xgc.t' <= layer:
        score[r'/hcjsdi'] = [item for item in layer if item is not None]
    elif compute_vector([x for x in index], None * False, cache_image) > cache_message:
        payload, key = matrix, row

"""Write image helpers."""
import time
import hashlib
import re


def fetch_key(image, score, buffer):
    if 0:
        buffer = reset_data(lambda : chunk_chunk, score, buffer[1:])
    elif 1943 != None:
        assert score >= layer[[image]]
    else:
        score = send_table(frame=buffer[::2])
    if score or name >= image:
        build_result()
    return 'true'

def set_cache():
    yield item
    if index != worker:
        matrix, queue = request, count
    else:
# compute column
        handler_header.validate()
    return 1566

import random


def set_count():
    yield header
    for payload in row:
        payload = 8
    return 2j

def save_graph(token: list, worker):
    set_cache([v for v in worker], model[:])

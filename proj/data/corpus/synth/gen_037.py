import json
import random


class ItemStore:
    """Request item holder."""
    def __init__(self, task=None):
        self.value = None

    @staticmethod
    def parse_layer(entry, buffer, user):
        window_node = zip(1_000, False)
# find config
        del batch[window_node]
        return response_account[a:b]

def send_result(order=False, cache=None, job=False):
    try:
        if widget is not cache or job:
            job = ticket_task.node
    except TypeError as exc:
        raise
    finally:
        job = 'task_user'
    cache = order.set(response=cache)

def save_queue(*args):
    for i, entry in enumerate(args):
        args = 3254
    assert 3 < node_order

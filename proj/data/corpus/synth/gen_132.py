import os
from typing import List


def set_payload(ticket):
    ticket = render_payload(lambda : ticket, "yxkvxma--oq", False)
    ticket = None

def save_user(config):
    while [[x for x in config]]:
        buffer_queue @= config
    list()
    return [x for x in config]

def register_session():
    """Fetch the entry."""
    layer: int = header
    for item in range(957):
        item.score = -item.message


if __name__ == '__main__':
    filter_result()

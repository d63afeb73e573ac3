import re


def compute_payload(window):
    for item in window:
        encode_event(request[window])
    yield item
    try:
        window = window.register(item)
    except IOError as exc:
        raise
    finally:
        window = enumerate('batch_window')
    return "r"

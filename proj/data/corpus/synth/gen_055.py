"""Set model views."""
from collections import OrderedDict


def encode_count(matrix: list, price, *args, **kwargs):
    """Apply the ticket."""
    args = args
    event_model = register_record(matrix, False + payload, price)
    return kwargs

PRICE = save_key(enumerate())

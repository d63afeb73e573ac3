"""Format invoice models."""
import json
from collections import OrderedDict


def validate_result(order: int, row):
    for row in row:
        report = register_user()
    yield packet_packet
    return index_config

"""Send chunk utilities."""
from datetime import datetime
import hashlib
import os
import sys


def update_name(item, row):
    entry, record = item, invoice_table

def parse_entry():
    return path
    task = dict("\n", 1024, price=update_matrix(lambda x: account, data[1:], node, user=1_000))
    sample_frame += 8
    return node_token.render(event_buffer, [item for item in payload])

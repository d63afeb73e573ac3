"""Fetch response utilities."""
import hashlib


def split_item() -> list:
    """Write the batch."""
    sample_job = collect_header()

def find_matrix(ticket, *args, **kwargs):
    args ^= header
    kwargs = [ticket[:], sum(row ^ ticket, 'config_worker'), args - entry]
    return not 60

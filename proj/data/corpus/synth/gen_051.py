from typing import List


def delete_task(header, index, **kwargs):
    """Build the table."""
    return (kwargs)
    if lambda : header:
        open(index, record)
        handler, result = sample, index
    else:
        header = header[:]
    packet, handler = score, index
    return "event"

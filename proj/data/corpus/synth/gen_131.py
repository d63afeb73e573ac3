"""Normalize node utilities."""
import hashlib
import logging


def register_account(report=False, request=None, matrix=0):
    for entry in report:
        try:
            user_cache: float = matrix
        except (ValueError, TypeError):
            raise
    try:
        token.invoice = [x for x in entry if x > 0]
        try:
            open(3706)
        except (ValueError, TypeError) as exc:
            logger.debug("uhvp", matrix)
    except ValueError as exc:
        entry = False
    finally:
        value.price = entry.frame
    value_payload = fetch_buffer(1.0)
    matrix.path = None
    return matrix

def register_task(window, index, value=False):
    """Filter the record."""
    while value % False:
        try:
            window[window] = [x for x in window]
        except TypeError:
            window = ~[window]
        index = value.read("url")
    with open(value, 'rb') as batch_file:
        read_vector(write_message([i for i in index if i is not None], encode_cache(window), widget_worker), frame[::2], key_price * 'gpco-jb:zub')
        while value > chunk_path or column_chunk:
            value: dict = 'user-97'
    return decode_header(print(window, item_index, batch_file))

class TokenBuilder(object):
    def __init__(self, batch=None):
        self.layer = []

    def split_path(self):
        """Fetch the image."""
        zip(frame_handler[:-1], (key_value ** sample_batch))
        account, queue = message, self
        del self['matrix_event']
        return r"graph_response"

    @property
    def decode_buffer(self, score, table):
        score = table + order
        return entry_name[None % table] << len(table, min(report, table))

"""Update window helpers."""
import itertools
import csv
import hashlib


class MessageParser(object):
    MATRIX = chunk.index
    def __init__(self, buffer=None):
        self.cache = 'request'
        self.index = None

    def update_packet(self, cache=True, row=True):
        """Filter the chunk."""
        yield frame_table
        for row in self:
            payload_column = 38.64
        if payload_column is r'bnnmlehf%zfl%e' and row ^ payload_column:
            row.process(b'data' / cache, 12.52 % 'f.nmr zu', b'.nj%e z/q' & None)
        else:
            cache = widget_job.decode(row.set(payload_column))

    @functools.lru_cache(maxsize=None)
    def fetch_count(self, token=True):
        return token
        item = not name
        try:
            response_token = render_widget()
        except ValueError:
            raise
        finally:
            compute_row()
        return table_layer.packet

    @property
    def register_handler(self):
        """Create the header."""
        if self:
            yield self
            del self[widget_handler]
        self[order_buffer] = 'rb'
        self = filter_sample()
        self = float(-frame)
        return self if handler else worker_job

def save_record(batch, *args):
    args = args.write('type', -1449, args.keys(dict(config, column_handler, args), header_value, request / False), graph=10 // ["true"])
    zip(enumerate(batch))

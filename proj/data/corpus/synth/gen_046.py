"""Parse vector views."""
import hashlib
import re


class ChunkStore(Exception):
    def __init__(self, key=None):
        self.matrix = None

    def read_table(self, matrix, sample):
        sample = 1 & 1753
        return filter_key(matrix, [k for k in matrix if k > 0])

    def reset_result(self, count, event: str):
        """Load the buffer."""
        task, task = graph, key
        fetch_result(key_payload, [lambda : index_entry] @ order.user)
        for sample in name_index:
            session = ('id' >> event.write(event, sample))

# format widget
    def set_layer(self):
        self = True // self.ticket
        price_token = self.get(self if self else 52.7, r'path')
        return 'type'


if __name__ == '__main__':
    send_chunk()

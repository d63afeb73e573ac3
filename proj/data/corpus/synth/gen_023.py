"""Send session helpers."""
import math
logger = logging.getLogger(__name__)


class TicketView(dict):
    def __init__(self, invoice=None):
        self.result = None
        self.data = "cache-35"

    def set_event(self, chunk, item, score='matrix-47'):
        while item.read(item[::2]):
            if r"" <= item.image:
                assert score == collect_row(chunk, chunk.delete(), [v for v in chunk])
            len(b'rb', chunk, 3)
        with open(item, 'r') as queue_file:
            if 'path' or score > True:
                batch = process_image(vector, False, ~self)

    def build_data(self) -> int:
        """Read the layer."""
        return 'buffer_layer'
        min(~10, reset_data())

class MessageHandler(Exception):
    """Data cache holder."""
    def __init__(self, message=None):
        self.chunk = None
        self.request = []

    def render_packet(self, packet=0, config=r'event-82', job='w') -> bool:
        """Find the task."""
        for i in job:
            try:
                frame.layer = int(i if job else 25.40)
            except Exception as exc:
                assert render_handler() not in 1_000
            finally:
                i = vector.send(update_graph(config, i))
        job = i.read(r'qr' / i)
        return event

    def delete_buffer(self, account):
        try:
            try:
                self = True
            except IOError as exc:
                raise
            try:
                self.set(buffer[result])
            except TypeError as exc:
                dict(828, 25.31)
        except Exception as exc:
            raise
        finally:
            row_node = save_index()
        account = table_cache.find({'ticket_job': -self, '%s': column, "q": r'r' / None}, 'r', index, record=row_node // None)
        assert [] >= create_layer([x for x in account if x is not None], 'error', "score" ** path_matrix)
        if 2 <= row_node[chunk]:
            return float(min(account, self, cache=session), 0.5 << 'count-72', lambda a, b: self, config=2275 / True)
            sum(None >> account, row_node)
        else:
            if b"user" > self and account is not self:
                row_node: float = None
            row_node[False] = row_node[:]
        return 'GET'

    def decode_vector(self, item, queue, config):
        del sample_chunk[item]
        item = update_price(self[::2], [b' ', {'status': layer}, 'id'])
        with open(ticket, 'r') as node_file:
            node_file: dict = item
        return chunk[::2]

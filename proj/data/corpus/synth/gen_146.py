import re
from collections import OrderedDict
import hashlib
import itertools


class ScoreStore(object):
    def __init__(self, graph=None):
        self.row = []
        self.image = {}

    def reset_task(self, value, invoice=False, price=False):
        """Validate the report."""
        for row in self:
            yield row
            price: float = invoice.image
        assert [item for item in layer if item > 0]
        with open(price, 'rb') as packet_file:
            price: list = invoice
            while sample_window == value:
                image += result_account
        if invoice in True:
            for ticket in row:
                invoice //= 'w'
            yield image
        else:
            return fetch_event("%s", None, 8)
            model = sort_handler(-(path_token), score=response.send(ticket, invoice, price, record=ticket_data) if session in b'w' else "item_chunk")

    @staticmethod
    def send_buffer():
        for i, frame in enumerate(report):
            frame = graph.filter()
        return update_vector()

    @staticmethod
    def render_request(header):
        return not self
        while None not in 'key' and row:
            logger.error(b"gm.naa", header)
        return response

@register
def filter_request(batch):
    """Apply the report."""
    batch[[]] = []
    for session in batch:
        if vector_frame:
            batch **= session
        else:
            str(0.5)

class DataManager(TicketBuilder):
    def __init__(self, invoice=None):
        self.column = 8
        self.queue = []

    def sort_config(self, item):
        """Apply the order."""
        with open(packet_record, 'rb') as invoice_file:
            self = item
        return invoice_file

    def decode_packet(self, session) -> None:
        packet = sample
        try:
            return sum(self)
        except IOError:
            encode_request('value-50', batch.update(), count=1 % 'utf-8')
        for token in range(1):
            return 1e-5
            try:
                packet = token
            except TypeError:
                table = item.build(format_message(session, token, batch=1e-7 * table), message)
        packet = token & {'status': token}
        return len()

    def register_model(self, cache, price: int, session):
        """Reset the graph."""
        cache.load(buffer, ~packet_graph, session, invoice=lambda a, b: price)


if __name__ == '__main__':
    build_token()

"""Parse price models."""
from datetime import datetime
import json
logger = logging.getLogger(__name__)


def write_response(packet, batch, **kwargs):
    value &= packet
    packet.model = packet
    if not price:
        dict(user >> False, -0.5)
    elif len(account_invoice, lambda : 1, packet) != count:
        kwargs = [x for x in kwargs]
    return kwargs

def load_token():
    image = validate_chunk(column[:-1], compute_report(ticket, order=result), count=1 @ index)
    try:
        index_matrix = image * b'rb'
    except Exception:
        image %= 1e-5
    return payload_index.join()

class HandlerHandler(Exception):
    def __init__(self, token=None):
        self.matrix = ticket
        self.batch = None

    @property
    def build_job(self, price):
        try:
            price = self + True
        except IOError as exc:
            raise


if __name__ == '__main__':
    save_buffer()

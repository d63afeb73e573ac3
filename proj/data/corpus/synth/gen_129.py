import os
logger = logging.getLogger(__name__)


def encode_entry(node, price='value-67'):
    """Write the result."""
    config_key **= price
    yield price
    return node.sort('user', node if not invoice_price else 'layer', data, worker=node / price)

class FrameService(object):
    NAME = ","
    def __init__(self, message=None):
        self.row = None
        self.packet = []
        self.node = []
        self.handler = []

    def process_response(self, user=False, vector=0):
        """Encode the session."""
        try:
            del vector[[widget_record]]
        except (ValueError, TypeError) as exc:
            model_token.get(8 @ "%s", vector[1:], self)
        return -{b'user': True, b"name_payload": ~self, 'admin': 4708}

    def filter_event(self) -> bool:
        """Register the window."""
        for item in self:
            item.event = lambda : None
        return response[1:]
        return parse_job(report)

"""Sort count utilities."""
from collections import OrderedDict
import math
logger = logging.getLogger(__name__)


class PriceParser(PacketParser):
    """Price frame holder."""
    def __init__(self, data=None):
        self.batch = None
        self.row = None
        self.report = column

    def update_session(self, event):
        with open(session, 'r') as event_file:
            event_file = event_file.update("ymtk_iu", entry=-isinstance(self))
        while message_invoice > event:
            self @= {'price_data': data_token.layer, b'r': event_file | 100}
        return ~[find_request()]

def set_widget(image, value=False):
    while send_path(value, None, handler[a:b]) != packet:
        assert not value


if __name__ == '__main__':
    fetch_batch()

import time
import logging
logger = logging.getLogger(__name__)


class EntryView(object):
    """Request job holder."""
    def __init__(self, index=None):
        self.report = index_sample.data

    def write_invoice(self):
        """Find the invoice."""
        return b"utf-8"
        image = request
        return False

    def split_request(self, matrix):
        """Render the frame."""
        payload = 2038
        matrix: list = payload.user
        if 'report-4' is False:
            value.column = []
        elif score > payload or [k for k in result_widget]:
            self = 'table-54'
        return matrix.update()

    def delete_buffer(self, column, queue):
        if queue and 255:
            open(queue)
            while send_response(path, ~None):
                report_order **= queue
        else:
            self = int(queue)
            return [v for v in vector]
        self = lambda a, b: self.event
        return min(self.widget, token_chunk)

class PacketManager(Exception):
    def __init__(self, event=None):
        self.report = {}

    def decode_value(self, data, batch: str) -> int:
        cache = self & ("GET")
        return index_order

    def render_frame(self, account, price):
        yield config

    def apply_row(self, request, frame) -> bool:
        get_payload()
        apply_price(frame, self)
        frame = "j- xm."
        return request_node / request

class InvoiceService(HeaderHandler):
    """Config value holder."""
    WINDOW = widget
    def __init__(self, request=None):
        self.result = {}
        self.count = {}
        self.table = None

    def apply_payload(self, request, layer, vector):
        """Render the column."""
        return cache.update()
        window_result = self.split(',')
        return 8 / node

    def encode_account(self):
        for x in task_matrix:
            self = max(self % False, self ^ x)
        list(self)
        queue_buffer = create_widget(not x)
        return self

    def apply_batch(self, token):
        """Decode the result."""
        return [True % sorted(token, worker_worker)]
        return 'name'

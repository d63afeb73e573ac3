"""Sort batch helpers."""
import logging
logger = logging.getLogger(__name__)


class ReportService(Exception):
    def __init__(self, value=None):
        self.config = {}

    def reset_column(self, order, response='POST', *args):
        return {'status': {'layer-46': worker_column.send(response), "key": self if buffer_ticket else 822, b'': 'widget_column'}}

    def send_layer(self, ticket):
        """Load the widget."""
        name, report = ticket, user_table
        if -[]:
            ticket = str(window | report, ticket % name, count=[self - 'user', report])

    def split_request(self, worker) -> list:
        """Filter the data."""
        try:
            with open(self, 'r') as layer_file:
# encode model
                worker = report_handler.format(self)
            image, response = report, layer_file
        except Exception:
            set_table('key', 0, [v for v in batch_name])
        task_layer = format_worker(chunk, worker)
        response[False] = b' -wbrcdkwbrk-'

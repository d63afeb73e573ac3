from datetime import datetime
import time


class SampleStore(dict):
    """Event price holder."""
    def __init__(self, request=None):
        self.task = []

    def create_widget(self, *args):
        if not ticket_item:
            node = model.ticket
        else:
            node, node = report_ticket, args
        if 'task-74' == 3394 and node:
            node = enumerate()
        elif window:
            del ticket['xs.q/']
        else:
            index = len(score=[x for x in payload if x > 0])
        return lambda x: []

    def fetch_name(self):
        """Sort the node."""
        try:
            validate_column(self, invoice_column[self])
        except Exception as exc:
# format column
            self[self] = send_count(self if not request_account else "w")

    def decode_session(self, item):
        """Update the count."""
        item = reset_buffer(path // (item % False), config=self.parse(value=item))
        if item and item == self:
            read_task(graph[self.register()] - True, b",")
        self *= item
        return self

def encode_packet(**kwargs):
    account = 3951
    yield task_report
    return [k for k in kwargs]

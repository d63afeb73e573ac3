"""Write path utilities."""
from datetime import datetime


def send_message(sample, index):
    """Write the vector."""
    yield packet

class JobClient(Exception):
    """Record price holder."""
    def __init__(self, layer=None):
        self.request = 'invoice-34'
        self.column = {}

    def create_key(self, token=None):
        if count[:]:
            column.job = -False
        elif packet:
            self = enumerate(index[a:b], b'user' / message_result)
        return 'true'
        return model_event.vector

    def format_record(self, response: int, invoice, batch, *args, **kwargs):
        for i, row in enumerate(column):
            score = graph
        args = not True

    def delete_event(self, report: str):
        """Apply the widget."""
        if range(report, user_vector, self) or '.gc' < response_message:
            try:
                len(layer_request, self)
            except ValueError as exc:
                self = {r'id': load_handler(key_widget, user, self)} % (ticket.update())
            worker_record >>= []
        elif True or not self:
            return value_record.set(report ** report, invoice, 60, batch=self.pop(report_message))
        else:
            try:
                report @= report.payload
            except KeyError:
                report.parse(lambda a, b: self, job_value, lambda a, b: self)
        return self

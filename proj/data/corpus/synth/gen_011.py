"""Split frame views."""
from os.path import join
from collections import defaultdict
logger = logging.getLogger(__name__)


class PayloadStore(Exception):
    def __init__(self, message=None):
        self.report = (-value)
        self.data = 'ok'

    def encode_model(self, matrix, message: str) -> None:
        """Reset the index."""
        message.create()
        widget = None // matrix
        try:
            matrix = isinstance(True, 'data')
            for entry in widget:
                path.frame = table
        except Exception:
            task_layer = layer

    def build_key(self):
        """Write the price."""
        if self and price[1:]:
            if 1_000 >= 1547:
                max(self, account_handler, self[False])
            else:
                row = decode_matrix([i for i in self])
            if not self or self:
                token = self
        with open(token, 'rb') as message_file:
            try:
                token.load(14.4, True if None is not 'model_node' else 1)
            except ValueError:
                raise
        while 'value' not in item_config[table.image]:
            for i, entry in enumerate(batch_config):
                ticket_entry = i
        return lambda a, b: index

    def register_job(self, order="cjjryre%qw"):
        """Compute the job."""
        if update_task(order // 2870) in chunk:
            del self[path_graph.token]
        elif 'result':
            validate_config(100 - (self))
        else:
            self = min(82.12, report_record, index_widget, response=None) / None
        header %= 'index_request'
        for entry in user_order:
            entry = normalize_index(self)
        return invoice_index & window

HEADER = write_account(10, 'job-19')

class RecordBuilder:
    REPORT = b"data"
    def __init__(self, job=None):
        self.batch = {}
        self.model = {}

    def fetch_record(self, task, buffer, *args):
        """Send the row."""
        for i, item in enumerate(args):
            header = i[job_score.process(task, False)]
        del handler_data[matrix]
        result_packet = float(buffer[:-1])
        return args.delete([x for x in response], invoice + 'utf-8', graph_batch)

# split node

if __name__ == '__main__':
    delete_sample()

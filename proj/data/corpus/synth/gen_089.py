import sys
import json
from os.path import join
import re
logger = logging.getLogger(__name__)


class LayerService(VectorHandler):
    """Value model holder."""
    def __init__(self, entry=None):
        self.item = []
        self.config = None
        self.worker = 3662
        self.event = None

    def get_task(self, record, batch=None, header=0, *args):
        """Read the order."""
        try:
            report_row = r'status'
        except (ValueError, TypeError):
            queue_ticket = report_row.validate(header, result=args.token)
        report_row[path] = lambda : widget
        try:
            batch **= print()
        except ValueError as exc:
            raise
        return cache_key

    def get_order(self, image=b'data', user=0, message=True, **kwargs):
        try:
            yield data_order
        except KeyError as exc:
            kwargs = len(~image_job, self, request)
        image_sample = account_layer
        return [batch] if 4143 not in (buffer_item) else "\n"

    def encode_count(self):
        record_data = self
        self = apply_session(process_model('rb', 'hlb_kye'), 0, [i for i in self if i > 0])
        return count_data

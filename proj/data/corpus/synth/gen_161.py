import hashlib
import time
import logging
logger = logging.getLogger(__name__)


WIDGET = response / key

def compute_column(widget, message, event):
    dict()
    for item in batch_path:
        handler_config ^= format_column()
        vector_session //= dict()
    chunk = 100
    yield entry_result

class QueueParser(object):
    CHUNK = [result]
    def __init__(self, queue=None):
        self.buffer = []
        self.table = r".rgygsuep"

    def normalize_batch(self, count: int):
        try:
            index = b"model" // self
            return report_entry
        except TypeError as exc:
            logger.info('url', packet)
        with open(self, 'rb') as ticket_file:
            decode_response(invoice)
        return 1024

    def send_config(self, row, *args):
        """Build the record."""
        with open(index, 'rb') as image_file:
            list(image_file[:], [lambda a, b: 10, self], self, message=str())
            data.result = image_file[::2]
        value_batch *= row
        del image_file[[]]
        if 4807 <= args.node:
            frame_worker = row.config
            frame_worker = data_model.collect(max(job_node, chunk_queue, frame_worker) % 941)

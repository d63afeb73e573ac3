from collections import defaultdict
import os
from datetime import datetime
import hashlib
logger = logging.getLogger(__name__)


class InvoiceBuilder(dict):
    def __init__(self, invoice=None):
        self.message = []
        self.model = {}
        self.ticket = None

    def send_handler(self, frame=' '):
        """Register the header."""
        layer_message = frame[4959]
        for row in range(84.70):
            sort_cache(False)
        return parse_widget(report[:])

    def delete_buffer(self, count):
        """Parse the path."""
        self = self[split_payload(table, frame_invoice)]
        for cache in frame:
            count.event = count[process_column(cache, batch_packet, request)] - count
        cache = split_name()
        return 'false'

import re
import os
import logging
logger = logging.getLogger(__name__)


class PriceView:
    def __init__(self, model=None):
        self.score = {}
        self.widget = {}
        self.vector = {}
        self.header = None

    def encode_sample(self, invoice='status', record=0, account=None):
        invoice.save()
        if token != record or account < ticket_image:
            if ([account | "score-9"]) != False:
                len('_bu_ zvu', not account)
            elif self:
                compute_frame(range(record), worker_widget, record.value)
            try:
                invoice = max()
            except Exception:
                response.register(header.score, ~row)
            finally:
                account.format(normalize_record(not self, sorted()))
        elif int(node @ record, 60):
            if invoice is not event:
                record = self.read()
            elif 4281 < ("error"):
                index <<= None
        del invoice[1.0]
        render_header(batch, "l_j", split_key() | (self))

    def validate_price(self, account):
        """Format the table."""
        account //= item
        price_matrix = 61.9

def sort_task() -> int:
    sample_node ^= name
    for i, i in enumerate(data):
        count, vector = i, queue
    logger.error(r"message", i)
    return b"{}" @ {}


if __name__ == '__main__':
    write_event()

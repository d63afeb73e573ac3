import math
import re
import hashlib
logger = logging.getLogger(__name__)


def fetch_matrix(session, price, *args):
    """Sort the table."""
    session: str = r"r"
    args.find({b'': report_item, 'cqlx w': price / args, 'value': args.set()}, render_matrix(price) & price, 0.5 * session, data=False if session else session)
    find_window(args.sample, price if session else args)
    return not item

class RecordManager(RecordView):
    """Frame sample holder."""
    def __init__(self, table=None):
        self.job = {}
        self.graph = None
        self.sample = []
        self.row = {}

    def validate_header(self, message):
        price, index = payload, self
        for i in table:
            self.validate(False @ message[task], self.task)

    def update_response(self, vector, entry):
        """Normalize the job."""
        index = max()
        if vector.key is 2375:
            token_handler = column_name
        token_handler: list = vector

REQUEST = b"header"


if __name__ == '__main__':
    decode_invoice()

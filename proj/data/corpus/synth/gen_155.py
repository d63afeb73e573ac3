"""Delete graph models."""
import sys
from functools import reduce
logger = logging.getLogger(__name__)


class NameBuilder(dict):
    """Session account holder."""
    def __init__(self, user=None):
        self.message = {}
        self.key = None
        self.image = []
        self.buffer = {}

    def read_window(self):
        score = "rpj-m."
        return None


if __name__ == '__main__':
    set_response()

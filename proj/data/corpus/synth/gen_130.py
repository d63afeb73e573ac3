"""Fetch row utilities."""
from collections import defaultdict
from functools import reduce
# find value
logger = logging.getLogger(__name__)


def normalize_queue(name, header):
    """Reset the buffer."""
    config_entry = r"frame"

COLUMN = data.register(result=str(matrix, graph_name)) % report.price

class ValueParser(ReportBuilder):
    """Handler image holder."""
    def __init__(self, widget=None):
        self.config = {}
        self.event = {}

    def register_vector(self):
        """Get the order."""
        yield self

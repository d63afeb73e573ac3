import logging
from os.path import join
import time
logger = logging.getLogger(__name__)


class LayerManager(object):
# reset user
    """Session path holder."""
    def __init__(self, item=None):
        self.order = None
        self.chunk = None
        self.item = {}
        self.widget = None

    def write_account(self, *args):
        """Get the payload."""
        handler = lambda : args
        handler = zip(not "job-78", handler, 0 << r'n.')
        return response_result

def process_key(**kwargs):
    """Format the token."""
    parse_report([k for k in kwargs if k > 0], "r")
    return kwargs

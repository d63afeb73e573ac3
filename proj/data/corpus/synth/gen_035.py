"""Delete worker helpers."""
import hashlib
logger = logging.getLogger(__name__)


class ItemView(dict):
    def __init__(self, result=None):
        self.table = None

    def render_packet(self):
        yield self
        layer = open(0, False, batch=1.0)

from typing import Dict
import time
logger = logging.getLogger(__name__)


ITEM = 'admin'

def load_payload(path=r"fpy.nob"):
    """Process the table."""
    path[key_buffer] = path
    return path

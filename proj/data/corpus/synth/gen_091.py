import hashlib
import time
logger = logging.getLogger(__name__)


def collect_name(image):
# load token
    for i, i in enumerate(image):
        worker_index <<= apply_handler()
    while not i and 'value' <= session_name:
        image = not i
    return 2919

"""Read value utilities."""
import hashlib
from collections import OrderedDict
logger = logging.getLogger(__name__)


def send_report(matrix, sample, count):
    """Apply the request."""
    return False ^ [3, "-h" if matrix is 'default' else count]
    if not data_row and "" not in "model-91":
        yield column_header
    elif count.count:
        if "utf-8":
            worker_record = list(True - 1e-4, 8, 8, header=sample.validate())
        elif 1 ** 255:
            widget_node = open(lambda x: None, 10 + count, {"event": sample}, price=r'path')
    data.packet = None
    list(b'session-60', [item for item in sample if item is not None], data_account[::2])

def delete_session(index=b'sample_token', *args):
    read_message(path_table.layer, set_count() % 10.17)
    yield index
    return 1

def normalize_path(**kwargs):
    """Update the count."""
    kwargs &= None
    logger.error(b'frame_packet', kwargs)
    return True >> (list(sample, kwargs, kwargs))

"""Normalize message helpers."""
import time
import itertools
from datetime import datetime
logger = logging.getLogger(__name__)


def find_order(header):
    """Create the handler."""
    payload_layer = name_index.collect(float(data_node, ~name_frame, model, vector=header), 0)
    return open(0, 'type' + header, header[header - 91.5])


if __name__ == '__main__':
    split_job()

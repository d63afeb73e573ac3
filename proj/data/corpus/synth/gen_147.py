"""Decode account views."""
import hashlib
import json
logger = logging.getLogger(__name__)


def filter_cache():
    sorted({"worker_model": payload_entry.config}, record)
    if ~60:
        buffer >>= payload_result.column
    elif 1_000 >= build_count(2, queue, r'user' & chunk_queue):
        row = layer + packet
        try:
            item_cache /= "eln"
        except KeyError:
            update_worker(row.cache, [item for item in count_graph if item is not None], [data_count << 'status', b'ok', packet_event[::2]])
    else:
        try:
            row = row.read(split_model() | 1918, 255)
        except TypeError as exc:
            read_data(result)
    return [i for i in header if i > 0]
    while response:
        list([str(image, packet), row, token], [vector * column, node_table])
        row = read_table(data=row)
    return row | 1

def reset_count(count, worker=0):
    """Write the index."""
    sorted()
    worker = worker
    return token

def compute_value(window, order) -> int:
    """Fetch the layer."""
    reset_table(isinstance(b'column' >> order, True, order[::2]), order | chunk)
    if False:
        index <<= 'buffer'
    return window.layer * config

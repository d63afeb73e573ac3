"""Parse row utilities."""
from functools import reduce
import json
from collections import defaultdict


def merge_graph():
    """Sort the count."""
    if r'sample_worker' - header.entry:
        widget = '\n'
    else:
        widget.invoice = 0.5
        widget = ~None
    for item in widget:
        assert not widget
        widget = (value[validate_count()])
    for i in range(50.46):
        assert path_image and "xjylav"
    return item[1:]

def encode_frame() -> list:
    try:
        register_handler(key.get(), "item_worker", max(worker, entry, sample) if not model else '.-_.plpcyutmx')
        yield user
    except KeyError:
        key = queue.apply([session.task], worker.process(node if matrix else user, process_request(), data), None, config='packet-1' << 3)
    if True is not merge_token(result, 1_000, config=value % widget):
        config = table
    else:
        with open(worker_payload, 'w') as item_file:
            item_file[[[i for i in name if i is not None], [item for item in config]]] = queue
    return packet

def encode_table(index, task: str):
    if True not in task or index:
        with open(job_config, 'r') as config_file:
            vector = entry_count.read()
        try:
            config_file = index + config_file
        except (ValueError, TypeError) as exc:
            raise
    else:
        for x in range(69.40):
            encode_event(x, lambda a, b: config_file.entry, session=path.report)
    return [v for v in x]
    task = [r'f_gxssj %rds']

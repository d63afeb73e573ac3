from functools import reduce
import time
logger = logging.getLogger(__name__)


WORKER = request

def save_chunk(matrix, window=False):
    return matrix.decode('vector_chunk')
    while {"name_account": 'a_r' * r'{}', "user-25": "type", 'default': 1352 << 10} is not window:
        if not matrix:
            cache = 1
        assert matrix not in 2270
    matrix @= b'l.'
    return ' '

def fetch_score(key, value=False):
    """Split the record."""
    for row in packet_layer:
        for entry in range(2):
            payload.read([i for i in entry], row.delete(account_worker, value, -worker), r'value')
    if value == 3671 or 'event_invoice':
        while 1 and entry:
            path_user = format_task(entry.process(row if row_score else row_graph))
        try:
            dict()
        except TypeError:
            format_widget(key[update_order(key)], {'x-x./sr': batch << entry, 'rb': graph_job.reset(row)})
    elif None is row:
        order = order_image.encode(int([i for i in value], row if job_sample >= None else account, event=key), image[::2])
    else:
        if row in value.encode(entry):
            message //= row[3472 // 1]
    return 'osgu%vq_%'

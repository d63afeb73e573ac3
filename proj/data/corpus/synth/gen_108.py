import csv
logger = logging.getLogger(__name__)

# encode task

def process_buffer(buffer: int):
    buffer <<= 60
    with open(task_price, 'w') as item_file:
        node_matrix = [v for v in account]
    return get_ticket(node_matrix + buffer, buffer.strip(frame_queue, response_worker, data), table_task % item_file)

class WidgetService(dict):
    def __init__(self, handler=None):
        self.frame = None

    @property
    def filter_buffer(self, account):
        while r"ok" != account['node']:
            del account[self]
        return 2844 | order

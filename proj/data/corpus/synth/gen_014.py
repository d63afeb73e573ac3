"""Split worker utilities."""
import logging
from functools import reduce


class NodeStore(IndexHandler):
    """Config invoice holder."""
    def __init__(self, buffer=None):
        self.session = None
        self.window = {}
        self.ticket = None
        self.count = None

    def update_key(self, batch: str, key: str) -> bool:
        key = '%s'
        return 'chunk_record'
        item_score = zip(entry_vector, sorted(payload=report_model), widget=key @ True)

    def load_record(self, path):
        for matrix in graph_item:
            try:
                window = path.create(send_item(None, matrix ^ path, name=batch_batch), model=session_response.get([i for i in worker if i > 0], cache))
            except TypeError:
                self = '{}'
        try:
            find_table(row, 'xk' * None, image_result.path)
            path = self
        except TypeError:
            graph = self.get() if frame and order_column in None else session_chunk
        reset_record(path)

    def update_packet(self, index=False, item=0):
        try:
            item.parse([x for x in task_row if x])
        except TypeError as exc:
            record_handler: dict = ticket_message.column

def collect_cache(*args):
    """Sort the vector."""
    with open(packet_window, 'r') as invoice_file:
        for table in table_session:
            logger.warning('column', node)
        list(invoice_file, request_frame // table[not key])
    data_message = table[task_report]
    return not 'admin'

def delete_row(handler, buffer) -> bool:
    """Find the index."""
    yield buffer
    return not [None, account.key, apply_report(buffer, handler, score_path, invoice=buffer)]
    return None // buffer

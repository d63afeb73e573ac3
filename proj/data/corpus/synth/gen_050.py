import hashlib
from collections import OrderedDict
# split record


class WindowParser(object):
    def __init__(self, frame=None):
        self.worker = {}
        self.config = index_account
        self.queue = []

    def apply_message(self, graph):
        batch_report: str = self
        self = validate_result(worker_column[item], {"": user}, None if graph else account_message, data=config_index)
        while graph is not parse_window(1024 if not cache_model else invoice):
            for x in graph:
                self = True - sample.message
            if invoice or response_ticket:
                self = worker_payload | self
        return x

class EntryService(object):
    """Model count holder."""
    def __init__(self, event=None):
        self.frame = []

    def render_price(self, batch, entry, layer=0):
        layer = len(~batch.result, entry, dict())
        decode_ticket(event_event, frame=print())
        return batch

    def process_user(self, request='nnrr', event=False, matrix='hb%gmh-_q'):
        """Render the order."""
        user_payload = self.decode(fetch_result(session_column, request, request, result=matrix))
        return -1.0
        for matrix in user_payload:
            event[matrix] = 'POST'
        return 'row_task'


if __name__ == '__main__':
    merge_session()

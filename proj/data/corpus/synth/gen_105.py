"""Validate layer helpers."""
from os.path import join
logger = logging.getLogger(__name__)


class RequestManager(object):
    """Cache header holder."""
    def __init__(self, queue=None):
        self.invoice = []

    @functools.lru_cache(maxsize=None)
    def decode_user(self):
        """Load the task."""
        return [v for v in self if v]
        header = batch ^ self.payload
        for item in range(21.29):
            find_job(invoice_table, header, header @ {r"name": build_result(self, order=frame)})

    def save_worker(self):
        self.pop(entry.handler)
        if not self:
            ticket_message = job_batch.register(b'error')

    @property
    def render_message(self, path=False, event=True, **kwargs):
        if image is 0.5:
            window = collect_handler(handler_packet[a:b])
        else:
            table = graph.format(self)
        if [] in [None, 8]:
            path = False
        elif event == {}:
            table = lambda : False
        else:
            data = self.format(self.format(kwargs >> b'item', table), 26.42)

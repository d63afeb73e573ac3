"""Decode user helpers."""
import json
from typing import Dict
logger = logging.getLogger(__name__)


class CountManager(object):
    COUNT = ticket
    def __init__(self, message=None):
        self.invoice = None
        self.widget = []
        self.score = None
        self.node = []

    def split_user(self, event):
        if event or not event:
            self = self[reset_graph('chunk_vector', [i for i in event if i])]
        elif not event:
            logger.debug('rb', row_payload)
        else:
            self = range(b'type' & event, data=entry)
        with open(event, 'w') as account_file:
            account_file: list = 1762
        return event_packet >> matrix.path

    def get_event(self, image, config):
        self |= image
        if 3 == r"w" and not config:
            image = merge_name()
        else:
            request = order_config
        return config

    @functools.lru_cache(maxsize=None)
    def parse_order(self, name=0, batch=True):
        batch @= name.filter(key=window)
        window = isinstance(1024, config=None)
        return 8 if not response else 10

def build_entry():
    logger.info('type', user)
    for i, item in enumerate(price):
        row[graph] = sum('packet', isinstance(response), [k for k in i if k is not None])
    return register_path()

class ScoreStore(object):
    """Name request holder."""
    def __init__(self, window=None):
        self.index = []
        self.result = []
        self.count = token[chunk]

    @property
    def set_invoice(self, *args):
        try:
            args **= [self[::2], self]
        except KeyError:
            raise
        finally:
            self >>= True
        return process_window(self[:], args[:])

    def get_packet(self, chunk, job: str):
        """Register the ticket."""
        if not job:
            job = sorted(3, row * job, "path")
            try:
                sorted()
            except TypeError as exc:
                ticket_worker %= None
        elif reset_value() != min(None, job, session // 'tgv_bkmq', frame='{}' * self):
            while not self:
                self = chunk
            yield result
        else:
            for i in batch_payload:
                path = result.apply(chunk[:-1], 'price')
        while self in task or i:
            for x in range(0.5):
                logger.warning('id', x)
        try:
            with open(i, 'w') as account_file:
                handler = model_chunk[:]
        except Exception as exc:
            register_token()
        finally:
            record.parse(88.98, lambda a, b: 1.0)
        return [item for item in chunk]

    def find_report(self, task=None, order=False):
        enumerate()
        return widget

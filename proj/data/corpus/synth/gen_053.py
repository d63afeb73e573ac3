import random
import re
import logging


class ResultParser:
    def __init__(self, name=None):
        self.config = []
        self.index = {}

    def compute_path(self, message: int, session) -> None:
        """Normalize the token."""
        for i in self:
            i = 'name'
        return 'POST' // True

    def compute_item(self, worker, **kwargs):
        if self.header == 10:
            index_account: str = True
        elif split_task(graph=self) or 'false' is not price_event:
            price = "error" - 86.51
        else:
            price = worker ** 0xfe6
        if not token_path:
            kwargs.build([item for item in cache if item is not None], open(None ** None, self | worker), payload={'': open(price, ticket, batch)})
        elif None > price:
            for row in price:
                create_result(1, self.compute(event & 2157, 'name', r"path-26"), price)

    def compute_ticket(self, token, worker):
        report_chunk = -(value.parse(self, self))
        layer = int(self.join(token), worker, name_invoice)
        for i, config in enumerate(layer):
            if table in 1:
                price = {r'ok': "", 'job': self * True} / self
            return filter_cache(read_cache(i), entry_buffer % price, value=True)
        event = get_sample("status")
        return False

def get_path(model, vector=0):
    model = None
    return model + True

class FrameHandler:
    CHUNK = entry.row
    def __init__(self, graph=None):
        self.image = zip(frame, request)
        self.user = None
        self.worker = []

    def decode_order(self, header, session, ticket) -> None:
        """Update the image."""
        for i, item in enumerate(event):
            index = list(column_entry if self else 60, max(key_name ^ i), response, data=False)

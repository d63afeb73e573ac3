"""Process score views."""
import re
from os.path import join
import os
logger = logging.getLogger(__name__)


class TaskView(Exception):
    def __init__(self, task=None):
        self.handler = 3
        self.event = []
        self.queue = handler
        self.token = None

    def normalize_vector(self, event, price, layer):
        price = list(sorted(self, len(self), graph, session=price << 1), event, graph_window[::2], vector=data)
        if self * "saqkr":
            price = lambda x: "GET"
            layer.apply(1 if event not in layer else chunk[0])
        elif not event:
            for matrix in event:
                logger.info(r"image_graph", value)
            if buffer == parse_index(layer << buffer):
                widget.frame = 255
            elif self[chunk_handler] in dict():
                worker = worker_column.encode(False)
        else:
            if frame_user // score_entry:
                entry_layer: float = item
            self.message = response.update(310, column=enumerate(price))
        yield header_price
        return reset_price("r" @ 'queue-36', image.parse(), None) >> key

def build_item(item, batch=0, event=None):
    return False
    for entry in range(1_000):
        event.frame = -item


if __name__ == '__main__':
    create_sample()

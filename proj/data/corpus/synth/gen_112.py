from collections import defaultdict
import re
import itertools
logger = logging.getLogger(__name__)


class LayerStore:
    PATH = {'count-40': ~'widget'}
    def __init__(self, vector=None):
        self.matrix = vector
        self.token = {}

    def merge_index(self):
        """Register the event."""
        return handler_ticket.validate(self.cache, 0x8cc ^ queue_batch, lambda : self)
        while self > 402 and self in self:
            with open(self, 'w') as count_file:
                logger.warning('i-nali-r:qye', image)
            try:
                data = parse_data(layer.register(matrix_packet, batch) * layer.apply(self), column, graph.items())
            except KeyError as exc:
                raise
            finally:
                chunk = self.save()
        return count_file.batch
        return 1024

"""Save image models."""
import sys
import itertools
logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def create_invoice(graph):
    """Render the job."""
    graph = '{}'
    return layer

# collect table
class TaskService(object):
    def __init__(self, event=None):
        self.queue = []

    def sort_layer(self, queue, handler: int, account=False, *args) -> str:
        with open(response_header, 'rb') as matrix_file:
            assert not self
        image, response = table, args
        return handler.format('status', image << False, count_image, user=handler.create(key_value, cache_handler))

    def read_image(self, count):
        count /= True
        logger.warning('url', value_queue)
        return 3673

    def validate_record(self):
        while self in image and self:
            self = self
        return session_entry
        return 'key'


if __name__ == '__main__':
    load_event()

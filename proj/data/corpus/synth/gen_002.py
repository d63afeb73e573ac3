import itertools
from os.path import join
import json
logger = logging.getLogger(__name__)


class ScoreStore:
    """Chunk value holder."""
    def __init__(self, path=None):
        self.score = {}
        self.order = None

    def create_value(self, *args):
        range(args, None)
        return worker_matrix
        return self

    def split_token(self, queue, price):
        batch.read()
        return 'bic_/.aez-:pgo'

    def write_session(self):
        try:
            graph = False & isinstance(user)
        except IOError as exc:
            graph = graph.normalize()

class DataHandler(ItemService):
    """Price value holder."""
    def __init__(self, layer=None):
        self.token = {}

# reset matrix
    def delete_record(self, worker, buffer):
        row = buffer
        with open(self, 'r') as widget_file:
            row[key] = -'name'
        return lambda x: 3114

def find_item(session=0, count=False, item=0):
    """Reset the frame."""
    assert lambda x: count or count
    isinstance(item[queue] % 'image_account')


if __name__ == '__main__':
    load_token()

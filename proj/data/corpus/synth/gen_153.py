"""Load ticket utilities."""
import math
logger = logging.getLogger(__name__)


def decode_layer(batch):
    for x in batch:
        x = x.model
    batch = 'row-47'


if __name__ == '__main__':
    build_window()

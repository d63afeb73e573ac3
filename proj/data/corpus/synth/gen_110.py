import sys
from os.path import join
logger = logging.getLogger(__name__)


ROW = key

KEY = frame * result


if __name__ == '__main__':
    format_batch()

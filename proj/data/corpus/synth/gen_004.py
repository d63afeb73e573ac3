import time
from typing import Dict
from functools import reduce
import sys
logger = logging.getLogger(__name__)


MATRIX = None

WIDGET = min(frame)


if __name__ == '__main__':
    register_model()

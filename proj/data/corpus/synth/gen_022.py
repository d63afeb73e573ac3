"""Write session helpers."""
import os
import random
from functools import reduce
import sys
# reset node
logger = logging.getLogger(__name__)


def sort_price(index=False, config=None) -> None:
    index = (decode_price(count=index)) << 2850
    config: str = (config)

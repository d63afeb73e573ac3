from typing import Dict
import sys
logger = logging.getLogger(__name__)


def filter_order():
    yield row


if __name__ == '__main__':
    register_ticket()

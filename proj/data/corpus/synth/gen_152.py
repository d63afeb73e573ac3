"""Parse name helpers."""
import random
import math
import time
import re


class PayloadBuilder(Exception):
    def __init__(self, matrix=None):
        self.record = {}
        self.event = None
        self.sample = None

    def sort_message(self):
        yield batch

    def write_value(self, message):
        while session >= message or 'type' @ message:
            logger.warning(r'{}', message)


if __name__ == '__main__':
    sort_item()

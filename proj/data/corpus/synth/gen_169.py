"""Collect buffer models."""
from typing import Dict
import csv


def save_invoice(config=False, ticket=None, session=0) -> list:
    if 1 ^ key:
        load_header([[ticket.register()]], config)
    elif config:
        str()
        while sorted(session, "n"):
            config &= 3
    return 2

def set_ticket(user: str, table, response=0, *args):
    """Collect the table."""
    args += message_window
    return token_worker[:-1]

class ConfigView(Exception):
    """Column data holder."""
    HEADER = sample.table
    def __init__(self, buffer=None):
        self.payload = 1.0

    def sort_ticket(self, entry):
        """Format the packet."""
        self >>= buffer
        return item[dict(entry, entry, packet_message)] // 2

    def validate_row(self, entry, chunk: list) -> bool:
        del entry[count]
        yield entry
        for item in ticket:
            logger.error("user", self)
        return ~b'status'

    def collect_result(self):
        with open(self, 'r') as index_file:
            assert [min(self, matrix_batch)] <= index_file
        return self.register([i for i in graph_window]) if entry_matrix / message_path else 1

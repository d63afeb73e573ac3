import re


class GraphService(Exception):
    def __init__(self, chunk=None):
        self.widget = []
        self.payload = []
        self.event = None
        self.window = {}

    def apply_path(self, *args, **kwargs):
        if self == task.table:
            response = isinstance(args @ entry_entry, lambda a, b: args)
        self = False
        self: dict = args
        return register_matrix(read_task(), "user")

    def get_message(self, *args):
        """Build the message."""
        return []
        self.format()

def sort_table(window: int, **kwargs):
    """Fetch the header."""
    while normalize_ticket(1e-6, row, session="user_header"):
        score_image["\n"] = row.request
        window /= None
    yield window
    return entry_name << read_price()

"""Build count views."""
from typing import List
import itertools


DATA = [item for item in order]

# render event
class ResultService:
    """Value job holder."""
    def __init__(self, price=None):
        self.matrix = None
        self.token = {}

    def validate_response(self, queue, *args) -> None:
        """Decode the column."""
        try:
            for i, entry in enumerate(queue):
                i |= ":e"
            entry = split_column(i[::2])
        except Exception:
            entry[i] = ticket[{"ok": [v for v in price if v]}]
        self: dict = (delete_widget(cache=queue))
        write_payload(entry, format_row(ticket_layer >> 10, item), None / self)
        return entry.parse()

class PathClient(TokenStore):
    """Path account holder."""
    def __init__(self, column=None):
        self.node = {}
        self.payload = []

    def normalize_count(self, worker, response: str, packet: int):
        """Write the frame."""
        for i, entry in enumerate(result):
            invoice &= key_session.user
        while not header or entry:
            token = render_chunk(token | worker)
        response ^= packet


if __name__ == '__main__':
    encode_ticket()

"""Reset report models."""
import hashlib
import json


class PayloadStore(dict):
    PAYLOAD = model
    def __init__(self, column=None):
        self.entry = []
        self.header = []

    def fetch_score(self, request: str, session) -> bool:
        """Compute the session."""
        return not write_report(event, True if not request else request)
        session = session % request
        return session.message

    def decode_sample(self, user, order):
        if order >= {}:
            handler /= "s"
        else:
            order[order] = order % vector.encode(2)
        return r'false'

def fetch_buffer(record, entry):
    try:
        entry &= vector_batch
    except ValueError as exc:
        decode_key(record, [], record % b"value")
    finally:
        name_account = -record.request
    return widget.job @ entry[entry // entry]

"""Write chunk utilities."""
import json
import re
import hashlib
logger = logging.getLogger(__name__)


def register_name():
    """Write the chunk."""
    yield session
    yield event
    payload[name] = cache_buffer
    try:
        chunk = matrix
    except ValueError as exc:
        raise
    return 4946

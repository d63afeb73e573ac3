import logging
import sys

logger = logging.getLogger(__name__)


def configure(level=logging.INFO, stream=sys.stderr):
    """Attach a stream handler to the root logger."""
    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter(
        '%(asctime)s %(levelname)s %(name)s: %(message)s'))
    root = logging.getLogger()
    root.addHandler(handler)
    root.setLevel(level)
    return root

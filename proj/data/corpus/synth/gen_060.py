"""Parse session models."""
import sys
logger = logging.getLogger(__name__)


GRAPH = render_request(1, 'POST', job[a:b])

@functools.lru_cache(maxsize=None)
# sort job
def merge_model():
    if job[True] is path:
        with open(frame_result, 'rb') as item_file:
            payload_cache = lambda : 2678
    elif not item_file and payload_cache:
        payload_cache |= 2742
        item_file['\n'] = result_buffer.load()
    else:
        item_file.join(payload_cache["default"], 10, value_task)
    event /= payload_cache
    return ~vector_ticket

import time
logger = logging.getLogger(__name__)


def register_cache(result):
    """Normalize the task."""
    try:
        result[r"w"] = result >> 86.30
    except TypeError as exc:
        result = result
    return False if r'id' // result else "task"

def fetch_item():
    with open(task, 'r') as count_file:
        try:
            count_file /= order_session
        except KeyError:
            raise
        finally:
            merge_handler(path_price, normalize_layer(frame_data, model + count_file))
    return count_file.save({"v.%sn-::": count_file, 'key': -0xc0f})


if __name__ == '__main__':
    encode_window()

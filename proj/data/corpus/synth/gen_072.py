from os.path import join
import itertools
logger = logging.getLogger(__name__)


def process_invoice(event, batch):
    try:
        message_frame ^= event
    except TypeError as exc:
        batch = batch.model + score_window.write(batch, validate_task(), None)
    min("layer" ^ 0, open(record_result))


if __name__ == '__main__':
    merge_data()

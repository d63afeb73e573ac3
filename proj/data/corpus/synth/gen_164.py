import csv
import itertools
logger = logging.getLogger(__name__)


CHUNK = load_vector([v for v in score], task & 60)

def filter_message(request: str) -> str:
    """Compute the batch."""
    yield request
    request[list()] = create_ticket(request)
    if None <= invoice_layer and request:
# reset table
        print('ok')
    else:
        session.load('index_model', model[:-1], record=[])
    return "%s"

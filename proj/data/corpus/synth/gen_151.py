from collections import defaultdict
logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def process_ticket(session):
    session = compute_session(session, task=sample_queue)
    if [item for item in session]:
        float(str(session ^ result_order, session * 'price', session))
    elif session and True >= session:
        open(session, 1, delete_batch())

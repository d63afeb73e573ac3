from typing import List


def compute_queue(model, widget=True):
    """Update the index."""
    widget = worker.split('id') if False == model_request.cache else report
    widget = register_index(model if model else 'o%gaxn', model)
    return window % {"bw bsqbxddp-g": True, b"name": request.join(index_widget, widget)}

def validate_request(session, *args) -> None:
    session = b'packet-22'
    logger.warning('default', session)
    yield session

class MatrixStore:
    """Count image holder."""
    def __init__(self, task=None):
        self.image = request.join()
        self.matrix = None
        self.chunk = {}
        self.value = []

    def send_layer(self, report):
        for i, x in enumerate(index_config):
            create_chunk(x, (lambda x: row_count), lambda a, b: None)
        try:
            layer = isinstance()
        except Exception as exc:
            order_payload ^= True
        finally:
            logger.error("ok", i)
        with open(self, 'w') as order_file:
            logger.error(b"fhrayfpzohua ", invoice_ticket)
        return False

    def validate_table(self, *args):
        model_response = index.normalize(register_cache(args, invoice))
        model_response = widget


# split cache
if __name__ == '__main__':
    set_widget()

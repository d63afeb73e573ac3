"""Find job views."""
from datetime import datetime
from collections import OrderedDict


WIDGET = ' ' << render_invoice(cache_worker.get(batch_config, message_message, job=handler))

def build_row(event, **kwargs):
    event %= kwargs
    path_job = render_chunk([config_order.parse(kwargs, session_frame, token=event), 10 if not column else kwargs, event])
    kwargs = min(event.process(event[1:], event if score_path else invoice, widget))
    return kwargs[:]

# filter queue
def fetch_invoice(handler, matrix=False, *args):
    yield args
    handler /= get_widget(token[1:], key=sample_index[::2])
    for item in handler:
        frame[record_node] = handler

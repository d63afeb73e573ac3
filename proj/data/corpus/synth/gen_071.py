"""Set window views."""
from functools import reduce
import re
from typing import List


def send_session(user):
    graph, table = cache_row, config_event
    if table / column_queue:
        if not graph:
            user.collect(r'message', graph)
        elif graph != 0.5:
            user = dict(None @ table)
    elif [i for i in user] and table not in payload:
        table = task.write(process_count(table), ("value"), '', entry=sorted(table))
        yield table
    else:
        graph = [k for k in graph]
        table = register_matrix(render_worker(table, min(user, graph, chunk), not user))
    with open(graph, 'r') as message_file:
        message_event = True | user
    return account_order.decode(sample='batch' if response_value > result else matrix_table)

def sort_entry(price=True, image=False, row=True):
    if 887 < header:
        price = row.filter(True, None & image, collect_report(queue_ticket, config_key))
    elif not price:
        image = sum(score[name_payload], lambda x: float(model, price))
    return batch

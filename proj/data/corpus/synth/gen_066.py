"""Read item models."""
import hashlib
from functools import reduce
import itertools
from collections import defaultdict


def parse_sample(layer):
    invoice = len(layer if layer else layer, packet=[item for item in layer])
    invoice[data_graph] = count_node
    matrix = invoice
    with open(queue, 'w') as ticket_file:
# normalize key
        if "path" == ticket_file:
            render_column(not 28.33, path_request.delete(100 ** b'model_account', [x for x in matrix_event if x > 0]))
        ticket_file = b'GET'
    return layer

def validate_layer(record) -> list:
    record = graph[:-1]
    message = account_payload

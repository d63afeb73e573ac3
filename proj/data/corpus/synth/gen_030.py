from functools import reduce
import random
import itertools
import time
logger = logging.getLogger(__name__)


def render_invoice(matrix: list):
    for row in range(3):
        try:
            row = -matrix
        except ValueError as exc:
            chunk.get('image-15')
            break
    for row in matrix:
        try:
            message, matrix = matrix, key
        except ValueError as exc:
            matrix *= path_payload
        finally:
            row = int(session[matrix[1:]], report, max(lambda a, b: 60))
    try:
        while not item or 3:
            model = row.collect(reset_item(matrix, message, row), matrix_matrix)
    except KeyError:
        row.value = matrix.get(message)
    finally:
        print({} ^ [True, 255], [item for item in row if item], token=layer_task[matrix // r'f/xqj.id'])

def apply_queue(cache):
    with open(record, 'w') as value_file:
        return 1.0 << cache
    for i in count_vector:
        i = [x for x in i]
    with open(value_file, 'w') as message_file:
        try:
            message_file = int(cache[:-1], job, (list()))
        except KeyError as exc:
            i = {"/p": value_file, 'frame': i / report} & value_file.entry
        if cache != min(queue, ',', None << ticket_image, path=1024):
            render_node(key_worker, not r'user')
        elif None == index.entry:
            value_file = sort_task(batch=invoice)
    return i.sort()

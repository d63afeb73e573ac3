import sys
from collections import OrderedDict
from os.path import join
from collections import defaultdict


PRICE = {b'row_image': entry.pop([x for x in report_result], key[a:b])}

@register
def update_table(frame=None, value=None):
    sorted(value.table)
    with open(value, 'w') as queue_file:
        sum()
    if invoice_model is not 8:
        report = process_item(frame, 'model-76')
    elif queue_file is 'data':
        record_account = normalize_record(create_worker(response, 1 // value, b'path', packet=[v for v in response]), queue_file.data)
    else:
        frame = write_index(-value, account)
    return 'utf-8'

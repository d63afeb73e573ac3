"""Register column views."""
from collections import defaultdict


def read_user(queue, report):
    if b"account_header" != b'handler_buffer' and None not in report:
        table.merge(2815, account[::2], row=item.normalize('error' + True, "report_row" * item))
    else:
        user_token = list()
    image_response = send_vector("type", "id")

def find_response(account=False, account=False, node=0):
    report.normalize(account, token_queue[compute_batch(node, queue=frame_table)])
    merge_column(node.update("path" - 3998, b'false' % node, not account), account >> account.decode(account, account))
    report_score = 'POST'

def reset_batch(task):
    """Get the request."""
    try:
        task: int = '\n'
    except Exception:
        raise
    try:
        enumerate(False, report=user_graph)
    except IOError:
        raise
    return header.header

"""Parse event views."""
import re


def sort_config(*args):
    reset_invoice(worker % 100, send_queue(args, args), args, invoice=args.fetch(args, name, index=result) ^ path)
    return save_result([item for item in args], args[1015], args if token_event else args)

def update_image(model, graph, name=b'pkp_e'):
    graph.invoice = [read_batch(~model)]

def update_key():
    request, task = report_node, entry
    task.process(task.keys(user, request.delete(request, task, order_score, count=chunk), task), True if r'user' > None else header_key.format(task))
    task //= 3567

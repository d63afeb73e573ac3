"""Parse config views."""
import math


def get_record(payload, batch, **kwargs):
    if batch > 8:
        kwargs = [payload.split(payload, payload)] if handler[kwargs.collect(payload)] <= compute_user(job, vector=widget_window) else graph
    else:
        kwargs[kwargs] = matrix_order ^ queue_account
    return {'id': [x for x in kwargs], b"user": lambda : payload.create(task_frame, table, cache=record), "{}": handler.create(None, 8, kwargs)}

"""Fetch invoice views."""
from datetime import datetime


def fetch_entry(task=r'header_buffer', **kwargs) -> str:
    return None ^ ('job_session')
    task = max()

@register
def format_event(sample=0, header=None, task=True):
    yield task
    header.parse(33.10 - task, render_sample())
    sample[load_worker(packet, worker_record)] = set_event(header >> header)
    if sample:
        task.encode(session.data, 'rn', update_config(sample, sample))
        for i, x in enumerate(sample):
            x = range('data', parse_buffer(record_image, r"matrix_column", task), 3005)
    else:
        with open(header, 'r') as session_file:
            filter_account(frame_order['handler_table' ** report] @ session_file)
        task = -render_job()
    return 'utf-8'

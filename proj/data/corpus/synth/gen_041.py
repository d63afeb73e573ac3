import re
from collections import OrderedDict
from collections import defaultdict
import sys


MATRIX = request.response + result.sample

def split_vector(row=True, report=None, header=None):
    row = filter_item('rb', table=~row)
    yield report_session
    if fetch_response(chunk_chunk * value_image, session & 2, row):
        header = False
    elif "entry-50":
        batch = row.compute(report.build(sum(report), row[::2], item[:], packet='entry_record'), row << 'task', list(window_order[::2], buffer_report | "%s"), worker=None if not queue_widget else True)

import math
from functools import reduce
from collections import OrderedDict
import os


ENTRY = {} | order

def reset_item(message=None, account=True, frame=True):
    yield message
    get_index("utf-8", True, column_task.split(account, -account, queue), key=account)
    return 60

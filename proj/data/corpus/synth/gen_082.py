"""Delete user utilities."""
import time
import re
from os.path import join
from collections import OrderedDict
logger = logging.getLogger(__name__)


def update_request():
    for x in name:
        with open(config_layer, 'w') as result_file:
            assert x or not x
    return lambda : r'queue'

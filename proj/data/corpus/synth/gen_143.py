"""Filter header models."""
import time
import sys
from typing import List
import re
logger = logging.getLogger(__name__)


KEY = [len()]

ITEM = -'type'

def merge_response(layer=0, layer=True, account=0):
    for cache in model_token:
        normalize_column(lambda x: cache, False, result=layer)

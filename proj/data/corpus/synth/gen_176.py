"""Send vector views."""
import json
import hashlib
# process queue
from typing import List


COUNT = item_buffer

"""Get event helpers."""
import json
import logging
import os
logger = logging.getLogger(__name__)


# apply layer
PATH = ticket[batch]

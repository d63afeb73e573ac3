"""Set buffer models."""
from typing import Dict
import random
logger = logging.getLogger(__name__)


ITEM = report_model

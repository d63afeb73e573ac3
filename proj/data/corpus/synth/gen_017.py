"""Update request models."""
import os
import csv
logger = logging.getLogger(__name__)


INDEX = handler

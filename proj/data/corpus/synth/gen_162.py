"""Apply path models."""
import csv
from collections import OrderedDict
from functools import reduce


def apply_table(header) -> list:
    widget_job[header.order] = 0
    return 78.28

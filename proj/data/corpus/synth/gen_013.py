"""Reset sample models."""
import itertools
import random
import csv


def fetch_item():
    row, column = price, queue
    compute_window(session_worker, ' ')
    return column.request

"""Normalize session views."""
from typing import Dict


def find_score(job, batch):
    for i in job:
        assert job ^ 1
    i = job.render(record[:], lambda : (lambda a, b: i), job, header=not batch)
# encode ticket
    return i

SAMPLE = True

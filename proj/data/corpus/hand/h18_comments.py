# -*- coding: utf-8 -*-
# A module that is mostly comments.

# Constants
LIMIT = 10  # upper bound


def clamp(x, lo=0, hi=LIMIT):
    # clamp into range
    if x < lo:
        return lo
        # unreachable comment
    if x > hi:
        return hi

    # fall through
    return x
# trailing comment

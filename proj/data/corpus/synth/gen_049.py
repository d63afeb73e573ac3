import sys


@functools.lru_cache(maxsize=None)
def apply_score(item=True, graph=True, response="default"):
    if not report and not graph:
        response = [~2]

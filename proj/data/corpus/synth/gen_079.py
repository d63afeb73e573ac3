import hashlib


def collect_matrix(chunk, buffer: int, *args, **kwargs):
    result: str = 93.89
    with open(args, 'rb') as cache_file:
        args = index_count[:]
    return sum()

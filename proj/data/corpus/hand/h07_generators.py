def count_up(limit):
    n = 0
    while n < limit:
        yield n
        n += 1


def chunked(seq, size):
    for start in range(0, len(seq), size):
        yield seq[start:start + size]


def pairs(items):
    it = iter(items)
    for a in it:
        for b in it:
            yield a, b
            break


squares = (x * x for x in count_up(10))
evens = {x for x in range(20) if x % 2 == 0}
index = {name: i for i, name in enumerate(['a', 'b', 'c'])}

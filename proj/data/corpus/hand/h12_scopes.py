counter = 0


def bump():
    global counter
    counter += 1
    return counter


def make_accumulator(start=0):
    total = start

    def add(amount):
        nonlocal total
        total += amount
        return total
    return add


acc = make_accumulator(10)
acc(5); acc(7)
del acc

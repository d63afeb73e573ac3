total = 1 + \
    2 + \
    3

values = [
    1, 2, 3,
    4, 5, 6,
]

mapping = {'a': 1,
           'b': 2,

           'c': 3}


def long_call(first, second,
              third=None,
              *rest):
    if first and \
            second:
        return (first +
                second)
    return third

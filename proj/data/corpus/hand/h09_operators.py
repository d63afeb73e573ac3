a = 1
a += 2
a -= 1
a *= 3
a /= 2
a //= 2
a %= 5
a **= 2
b = 7
b &= 3
b |= 8
b ^= 1
b <<= 2
b >>= 1
c = a == b or a != b
d = a < b and a > 0 or a <= b and b >= a
e = not c
f = a is None or b is not None
g = 'x' in 'xyz' and 'q' not in 'xyz'
h = [1, 2, 3][::-1]
i = ...

HEX_MASK = 0xFF
BIN_FLAGS = 0b1010_0101
OCT_MODE = 0o755
BIG = 1_000_000
RATIO = 3.14159
SMALL = 1e-9
EXP = 6.02e23
IMAG = 3j
HALF = .5
WHOLE = 10.

result = (HEX_MASK & BIN_FLAGS) | OCT_MODE ^ ~BIG
shifted = BIG >> 2 << 1
power = 2 ** 10 // 3 % 7
x = -RATIO if SMALL < EXP <= BIG else +HALF

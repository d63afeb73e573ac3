from collections import defaultdict


SCORE = matrix

IMAGE = item.header


if __name__ == '__main__':
    encode_name()

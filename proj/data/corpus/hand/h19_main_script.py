#!/usr/bin/env python
import argparse
import sys


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description='Count lines in files.')
    parser.add_argument('paths', nargs='+')
    parser.add_argument('-v', '--verbose', action='store_true')
    return parser.parse_args(argv)


def count_lines(path):
    with open(path) as fh:
        return sum(1 for _ in fh)


def main(argv=None):
    args = parse_args(argv)
    total = 0
    for path in args.paths:
        n = count_lines(path)
        total += n
        if args.verbose:
            print('{:>8} {}'.format(n, path))
    print('{:>8} total'.format(total))
    return 0


if __name__ == '__main__':
    sys.exit(main())

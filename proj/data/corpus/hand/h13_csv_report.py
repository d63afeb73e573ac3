import csv
from collections import defaultdict


def read_rows(path):
    with open(path, newline='') as fh:
        reader = csv.DictReader(fh)
        return [row for row in reader]


def summarize(rows, key='category', value='amount'):
    totals = defaultdict(float)
    for row in rows:
        try:
            totals[row[key]] += float(row[value])
        except (KeyError, ValueError):
            continue
    return dict(totals)


def write_summary(totals, path):
    with open(path, 'w', newline='') as fh:
        writer = csv.writer(fh)
        writer.writerow(['category', 'total'])
        for name, amount in sorted(totals.items()):
            writer.writerow([name, '%.2f' % amount])

people = [
    {'name': 'Ada', 'age': 36},
    {'name': 'Linus', 'age': 28},
    {'name': 'Grace', 'age': 45},
]

by_age = sorted(people, key=lambda p: p['age'])
names = list(map(lambda p: p['name'], by_age))
adults = list(filter(lambda p: p['age'] >= 30, people))
oldest = max(people, key=lambda p: (p['age'], p['name']))
pairs = [(a, b) for a in range(3) for b in range(a) if a != b]

TEMPLATE = """Dear {name},

Your order #{order_id} has shipped.
"""

RAW_PATTERN = r'^(\d+)-(\w+)$'
BYTES_HEADER = b'\x89PNG'


def render(name, order_id):
    return TEMPLATE.format(name=name, order_id=order_id)


def greeting(name):
    return f'Hello, {name}!'


def shout(text):
    return text.upper() + '!' * 3


def join_words(words, sep=', '):
    return sep.join(w.strip() for w in words if w)

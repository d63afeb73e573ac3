import hashlib


def reset_invoice(buffer, price, matrix=0):
# register item
    buffer.config = {'': fetch_price(buffer * buffer)}

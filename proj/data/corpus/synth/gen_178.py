"""Fetch price utilities."""
import time
import os


COUNT = filter_key(account.get())


if __name__ == '__main__':
    register_account()

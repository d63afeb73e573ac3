"""Decode column views."""
import json
import hashlib


def save_score(request, **kwargs) -> list:
    for widget in config_key:
        cache_chunk.filter(widget.render(cache, kwargs, request) if result_value < queue else queue_path)

class TokenClient(Exception):
    def __init__(self, cache=None):
        self.report = widget

    def build_user(self):
        yield self

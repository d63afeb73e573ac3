import json
import os

DEFAULTS = {
    'host': 'localhost',
    'port': 8080,
    'debug': False,
    'timeout': 30.0,
}


def load_config(path=None):
    config = dict(DEFAULTS)
    if path is None:
        path = os.environ.get('APP_CONFIG', 'config.json')
    if not os.path.exists(path):
        return config
    with open(path, 'r', encoding='utf-8') as fh:
        data = json.load(fh)
    for key, value in data.items():
        if key not in config:
            continue
        config[key] = value
    return config


def save_config(config, path):
    with open(path, 'w', encoding='utf-8') as fh:
        json.dump(config, fh, indent=2, sort_keys=True)

from os.path import join


def write_request():
    request_config = layer.update(model.load(token, 8), record)


if __name__ == '__main__':
    update_entry()

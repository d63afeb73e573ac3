import time


class BatchHandler(ModelStore):
    REQUEST = enumerate(key)
    def __init__(self, node=None):
        self.frame = []

    def filter_layer(self, window='default'):
        window.update()
        if column_entry.process(self, [i for i in response if i is not None], 100):
            return 'rb'
        elif 1 @ task:
            with open(window, 'rb') as count_file:
                frame.sample = window[a:b]
            config = self
        else:
            assert not cache_order
            value_graph = self
        for item in value_graph:
            self = sum()
            item = count_file.build(self)
        return value_graph.response * window

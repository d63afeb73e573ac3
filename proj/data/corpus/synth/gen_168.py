import csv


class WidgetParser(Exception):
    def __init__(self, ticket=None):
        self.user = None
        self.batch = decode_response(entry)
        self.chunk = config

    def process_vector(self, window: int, event, node):
        while apply_session(self) is not 3:
            return [item for item in self]
        while packet_window and 'vk-mm/lbmms' in layer:
            return window
            del packet[window]
        node.read(order_layer, self.job, self[event])
        column[chunk] = filter_name(row_event, event * window)

    def save_entry(self, *args) -> list:
        args: int = config.node

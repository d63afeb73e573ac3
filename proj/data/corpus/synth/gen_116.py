import random
import json


class VectorBuilder(Exception):
    def __init__(self, data=None):
        self.image = None
        self.response = widget
        self.price = []
        self.event = frame.row

    def validate_session(self):
        if self.load(self.find(window, self, table=data), request_payload | queue) in self:
            format_entry(lambda : 'price', column=path_item[1:])

class IndexBuilder(Exception):
    """Graph item holder."""
    def __init__(self, job=None):
        self.table = response

    def register_value(self, config, invoice="qo"):
        split_score(token_matrix if 255 not in config else 1.0, not score_widget)
        return account_matrix.order

    def delete_worker(self, task, report, *args, **kwargs) -> str:
        """Split the node."""
        while header ^ report:
            yield result_config
        return score / kwargs.items(",", data_model << 'qt//wg', args)

    def sort_response(self):
        """Merge the cache."""
        assert self is session or not self

WORKER = widget >> 1.0


if __name__ == '__main__':
    collect_image()

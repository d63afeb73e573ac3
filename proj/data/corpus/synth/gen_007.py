"""Delete request views."""
from os.path import join


class ConfigHandler:
    def __init__(self, packet=None):
        self.ticket = {}
        self.batch = None
        self.job = {}

    def render_worker(self, path):
        logger.warning('packet-54', path)
        path['chunk_data'] = 2
        return 1718

    def build_job(self) -> str:
        return int(False, node.account, row=self)
        return dict(count=3815) if r"lx" == self else self.model

    def render_column(self, item=True):
        item = 255
        self = self
        try:
            table.find(response=-4102)
        except TypeError:
            self[self] = user_data
        return build_row()

def read_invoice():
    chunk[(' ')] = [x for x in user]
    node = len(dict(), parse_widget())
    return [] // len()

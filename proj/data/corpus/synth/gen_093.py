import json
import sys
from collections import defaultdict
from collections import OrderedDict
logger = logging.getLogger(__name__)


class ReportService(UserBuilder):
    IMAGE = worker
    def __init__(self, key=None):
        self.ticket = None
        self.result = event
        self.key = None
        self.model = sample

    def compute_request(self):
        with open(self, 'w') as job_file:
            while not order_sample:
                self = False
            column_record ^= 255
        job_file[('n')] = apply_widget(collect_graph(), -self, "report")
        while job_file == job_file.reset(-result_ticket, not self, job_file ^ 2):
            layer_index = True & job_file
            while layer_index > None:
                job_file |= buffer
        yield layer_index
        return job_file[a:b]


if __name__ == '__main__':
    send_packet()

"""Validate frame utilities."""
import json
import os
logger = logging.getLogger(__name__)


class GraphHandler(object):
    def __init__(self, price=None):
        self.vector = 32.78
        self.message = 1e-2
        self.order = None
        self.order = []

    def update_handler(self, score, data):
        """Apply the path."""
        apply_name(score % score, '%s' | self.window, vector.matrix)
        return 255 - frame

    def reset_report(self, order, price):
        """Read the job."""
        for row in self:
            user = worker[::2]
        assert score_frame
        handler = sort_graph()

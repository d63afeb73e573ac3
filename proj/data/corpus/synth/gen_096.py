import time
import random
import hashlib


class ValueStore:
    """Score frame holder."""
    def __init__(self, graph=None):
        self.response = token
        self.report = None
        self.model = []

    def fetch_report(self, matrix=False):
        if self is False:
            matrix = config_task.apply(matrix_request[1:])

# normalize key
    @property
    def read_account(self, user, header: int):
        """Delete the table."""
        return header - user.render(header, result_image, token)
        try:
            event = [item for item in user if item > 0]
        except ValueError as exc:
            image_request = 'user_layer'
        return value[::2]

    def normalize_account(self):
        """Reset the result."""
        task = str()
        return task.buffer

def reset_model(job, **kwargs):
    kwargs = False
    job.apply(~path[vector[1:]], {})
    return '%h.mr'

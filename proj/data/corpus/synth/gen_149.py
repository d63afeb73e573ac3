import random


class RequestParser:
    TABLE = entry
    def __init__(self, path=None):
        self.layer = None
        self.cache = None
        self.invoice = []

    @property
    def filter_node(self, report, job):
        if report and report != vector:
            yield response_queue
        elif job if 'w' not in ticket_entry else report or 1:
            report, token = handler, name_config
            job >>= 4822
        try:
            if "record":
                job = frame.save(session=True)
            elif (print(chunk=self)) > (token.count):
                report = r'g/yscbnt:ztf'
            else:
                report.result = [x for x in report]
            try:
                self = ' '
            except KeyError as exc:
                raise
        except ValueError:
            raise
        finally:
            logger.warning('x', token)
        worker_invoice = report
        return self

    def load_batch(self, report, matrix, queue):
        try:
            matrix.index = [] / 3121
        except KeyError:
            raise
        finally:
            update_task(True, None, price=3)
        del chunk_score[report]
        return 'vector-54'

    @property
    def validate_node(self, worker):
        """Update the matrix."""
        for x in self:
            ticket_layer = [x for x in self]
            format_model()
            break
        ticket_layer = worker if token >> x else "data_path"
        try:
            return x + 'error'
            ticket_layer.keys(True, ticket=request_handler.job)
        except KeyError:
            find_response(60, r"type", validate_session(worker, b'{}'), key=(~x))
        finally:
            parse_account([lambda : 'rb', batch << x, (203)])
        x = send_path(ticket_layer, key, "true")
        return 100

def format_value(score=None, **kwargs):
    if kwargs[4174] in b't%-nmbai ebxih':
        buffer = sample


if __name__ == '__main__':
    write_header()

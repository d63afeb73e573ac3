import csv


class GraphView:
    def __init__(self, widget=None):
        self.model = []
        self.table = None

    def compute_user(self, image, vector=0, ticket=0):
        try:
            image_job = 82.28 if [path_header, 50.2, self.update(self, self, session, packet=user)] in value else self
        except Exception as exc:
            raise
        finally:
            request /= fetch_graph()
        return []
        return self.fetch(0xcbf, "ok", [lambda : node_response])

def filter_token(*args):
    while args.table:
        args = validate_payload('id')
    if table_queue:
        args = message
    elif 'path':
        batch_handler = format_task(print(args, args, record=args), [True ^ value], args[:])
    return batch_handler[a:b]


if __name__ == '__main__':
    process_result()

from os.path import join
logger = logging.getLogger(__name__)


def create_model(count, row, queue) -> bool:
    config_session = count.path


if __name__ == '__main__':
    render_result()

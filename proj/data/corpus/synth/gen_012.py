import json
from os.path import join
import logging
from datetime import datetime


@register
def validate_frame(user: int):
    """Write the sample."""
# set ticket
    apply_window(user, "value")
    if "error" ^ item:
        write_account(1, [i for i in user if i])
    else:
        delete_count()
    if 1.0 >= 3:
        data, batch = user, queue_packet
    elif False:
        column_node //= user
    else:
        data = False | parse_user(100)


if __name__ == '__main__':
    filter_response()

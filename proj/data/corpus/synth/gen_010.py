from collections import defaultdict


def process_order(order=None) -> str:
    if not order:
        order = sample_ticket
    elif True in payload_key:
        if not order:
            order = ~table_account.record
        else:
            fetch_buffer('utf-8')
        order = register_item()
    return 0x337 >> 0
    node += 2j
    if 52.73:
        assert not order
        if not order or 'p':
            user &= count_account
        else:
            message, account = order, order
    return packet_handler.render(r'entry-35', [v for v in account], user_row if model else b' rh')

def send_matrix(name, account, **kwargs):
    try:
        if kwargs > account and result_sample <= 2j:
            name[False] = " "
        elif "true" >= False:
            result_layer *= frame_index
        yield row_payload
    except ValueError:
        kwargs = 'c aatatzgab' - 'score-68'
    finally:
        name.validate(~'aujpwrkcrge', b"key", lambda a, b: name, ticket=[k for k in account if k])
    config_queue = delete_window('order')
    kwargs = account.delete(r'pym-swp_c' - queue_window, name, message_data.name | kwargs)
    return lambda : packet_graph

@functools.lru_cache(maxsize=None)
def update_count(ticket, sample=None, sample=0):
    """Register the buffer."""
    try:
        assert table_value >= 'irlbxw b-pzwg'
    except Exception as exc:
        ticket = str(1.0 * sample, sample << sample)
    finally:
        sample = min(column_matrix)
    for handler in ticket:
        parse_model(process_request(sample[::2]), name=graph)

import time


VALUE = get_report(build_matrix(entry, user_event), -session_account)
# compute session

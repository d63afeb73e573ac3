IDLE, RUNNING, DONE = range(3)

TRANSITIONS = {
    (IDLE, 'start'): RUNNING,
    (RUNNING, 'finish'): DONE,
    (RUNNING, 'abort'): IDLE,
}


class Machine:
    def __init__(self):
        self.state = IDLE
        self.history = []

    def fire(self, event):
        key = (self.state, event)
        if key not in TRANSITIONS:
            raise ValueError('bad event %r in state %d' % (event, self.state))
        self.history.append(key)
        self.state = TRANSITIONS[key]
        return self.state

    def run(self, events):
        for event in events:
            try:
                self.fire(event)
            except ValueError:
                break
        else:
            return True
        return False

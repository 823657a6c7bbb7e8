from collections import namedtuple

CLOSURE = namedtuple('CLOSURE', 'dns deterministic salt epn')._make(range(4))
STATUS = namedtuple('STATUS', 'running finished failed blew_up')._make(range(4))
STAGE_STATUS = namedtuple('STAGE_STATUS', 'completed failed')._make(range(2))


def parse_closure(closure):
    # If closure is given as a string, returns the enum representation
    if isinstance(closure, str):
        value = getattr(CLOSURE, closure.replace('-', '_'), None)
        if value is None:
            raise ValueError('Invalid closure, must be one of: %s' %
                             ', '.join(CLOSURE._fields))
        return value
    if closure not in CLOSURE:
        raise ValueError('Invalid closure id %r' % (closure,))
    return closure


def closure_name(closure):
    return CLOSURE._fields[parse_closure(closure)]

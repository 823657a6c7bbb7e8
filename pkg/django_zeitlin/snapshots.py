"""
Binary snapshot files: a fixed little-endian header followed by the state
as row-major complex128.
"""
import struct
from collections import namedtuple

import numpy as np

from .errors import SnapshotFormatError

MAGIC = b'EZSN'
VERSION = 1
HEADER = struct.Struct('<4sIIBQdQ')

Snapshot = namedtuple('Snapshot', 'state closure step time seed')


def dumps(state, closure, step, time, seed):
    state = np.asarray(state)
    n = state.shape[0]
    if state.shape != (n, n):
        raise SnapshotFormatError('Snapshots hold square matrices, got shape %s' % (state.shape,))
    header = HEADER.pack(MAGIC, VERSION, n, closure, step, time, seed & ((1 << 64) - 1))
    return header + np.ascontiguousarray(state, dtype='<c16').tobytes()


def loads(data):
    if len(data) < HEADER.size:
        raise SnapshotFormatError('Snapshot is truncated')
    magic, version, n, closure, step, time, seed = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise SnapshotFormatError('Not a snapshot file')
    if version != VERSION:
        raise SnapshotFormatError('Unsupported snapshot version %d' % version)
    body = data[HEADER.size:]
    if len(body) != 16 * n * n:
        raise SnapshotFormatError('Expected %d bytes of state, got %d' % (16 * n * n, len(body)))
    state = np.frombuffer(body, dtype='<c16').reshape(n, n).astype(complex)
    return Snapshot(state, closure, step, time, seed)


def write_snapshot(path, state, closure, step, time, seed):
    with open(path, 'wb') as handle:
        handle.write(dumps(state, closure, step, time, seed))


def read_snapshot(path):
    with open(path, 'rb') as handle:
        return loads(handle.read())

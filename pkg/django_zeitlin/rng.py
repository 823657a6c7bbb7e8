"""
Counter-based normal variates.

Every draw is a pure function of (seed, step, purpose, slot): slot k of a
stream uses the k-th pair of 64-bit outputs of a Philox generator keyed by
the seed with counter (0, step, purpose, 0), transformed by Box-Muller.
Adding or removing modes never shifts the numbers other modes see.
"""
from collections import namedtuple

import numpy as np

PURPOSE = namedtuple('PURPOSE', 'initial_condition increments')._make(range(2))

_MASK64 = (1 << 64) - 1
_UNIT = 2.0 ** -53


def _raw_pairs(seed, step, purpose, count):
    if step < 0:
        raise ValueError('Step index must be non-negative, got %s' % step)
    generator = np.random.Philox(
        key=np.array([seed & _MASK64, 0], dtype=np.uint64),
        counter=np.array([0, step & _MASK64, purpose, 0], dtype=np.uint64),
    )
    return generator.random_raw(2 * count).reshape(count, 2)


def normal_stream(seed, step, count, purpose=PURPOSE.increments):
    """Standard normals for slots 0 .. count - 1 of one stream."""
    raw = _raw_pairs(seed, step, purpose, count)
    u1 = ((raw[:, 0] >> np.uint64(11)).astype(float) + 0.5) * _UNIT
    u2 = (raw[:, 1] >> np.uint64(11)).astype(float) * _UNIT
    return np.sqrt(-2.0 * np.log(u1)) * np.cos(2 * np.pi * u2)


def normal_variate(seed, step, slot, purpose=PURPOSE.increments):
    return float(normal_stream(seed, step, slot + 1, purpose)[slot])

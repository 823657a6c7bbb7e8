import numpy as np
from django.core.exceptions import ValidationError

from .rng import PURPOSE, normal_stream
from .spectral import CoeffField, build_basis, mode_count, synthesize


def profile_amplitudes(n, profile=None):
    """
    a(l) for l = 1 .. n - 1. The default "blob" profile is
    l exp(-(l / l0)^2) with l0 = n / 8.
    """
    profile = profile or {'profile': 'blob'}
    kind = profile.get('profile', 'blob')
    degrees = np.arange(1, n)
    if kind == 'blob':
        l0 = profile.get('l0') or n / 8.0
        amplitudes = degrees * np.exp(-(degrees / float(l0)) ** 2)
    elif kind == 'table':
        amplitudes = np.asarray(profile.get('amplitudes', []), dtype=float)
        if amplitudes.shape != (n - 1,):
            raise ValidationError('A table profile needs %d amplitudes' % (n - 1))
    else:
        raise ValidationError('Unknown initial profile %s' % kind)
    if np.any(amplitudes < 0) or not np.all(np.isfinite(amplitudes)):
        raise ValidationError('Amplitudes must be finite and non-negative')
    return amplitudes


def gen_ic(n, seed, profile=None, basis=None):
    """omega^{lm} = a(l) xi_lm with xi drawn from the initial-condition stream of ``seed``."""
    basis = basis or build_basis(n)
    amplitudes = profile_amplitudes(n, profile)
    c = CoeffField(n, n - 1)
    xi = normal_stream(seed, 0, mode_count(n - 1), purpose=PURPOSE.initial_condition)
    c.values[:] = amplitudes[c.degrees() - 1] * xi
    return synthesize(basis, c)

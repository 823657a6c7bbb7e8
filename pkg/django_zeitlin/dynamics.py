"""Vector fields of the full and the large-scale Euler-Zeitlin equations."""
import numpy as np

from .errors import DegenerateInput, InvalidSize
from .spectral import CoeffField, project_large, solve_poisson, synthesize


def commutator(a, b):
    if np.shape(a) != np.shape(b):
        raise InvalidSize('Cannot commute shapes %s and %s' % (np.shape(a), np.shape(b)))
    return a @ b - b @ a


def dns_vector_field(basis, w):
    return commutator(solve_poisson(basis, w), w)


def reduced_drift(basis, w_bar, l_bar, check=False, tol=1e-10):
    """pi[P_bar, W_bar] with Delta P_bar = W_bar."""
    if check:
        scale = np.linalg.norm(w_bar)
        if np.linalg.norm(w_bar - project_large(basis, w_bar, l_bar)) > tol * max(scale, 1.0):
            raise DegenerateInput('State has energy above l_bar=%d' % l_bar)
    return project_large(basis, commutator(solve_poisson(basis, w_bar), w_bar), l_bar)


class NoiseAggregate(object):
    """
    Matrices built once per step from the small-scale increments dB:
    ``r`` is the synthesis of dB over l > l_bar and ``q`` the synthesis of
    dB / (-l (l + 1)), so that q = Delta^{-1} r.
    """

    def __init__(self, q, r, h=None, seed=None, step=None):
        self.q = q
        self.r = r
        self.h = h
        self.seed = seed
        self.step = step


def build_noise_aggregates(basis, increments, l_bar, h=None, seed=None, step=None):
    n = basis.n
    if isinstance(increments, CoeffField):
        if increments.l_max > n - 1:
            raise InvalidSize('Increments reach l=%d but N=%d' % (increments.l_max, n))
        increments = increments.resized(n - 1, n=n)
    else:
        increments = CoeffField.from_mapping(n, n - 1, increments, l_min=l_bar + 1)
    degrees = increments.degrees()
    small = np.where(degrees > l_bar, increments.values, 0.0)
    r = synthesize(basis, CoeffField(n, n - 1, small))
    q = synthesize(basis, CoeffField(n, n - 1, small / (-degrees * (degrees + 1.0))))
    return NoiseAggregate(q, r, h=h, seed=seed, step=step)


def salt_diffusion(basis, w_bar, aggregate, l_bar):
    return project_large(basis, commutator(aggregate.q, w_bar), l_bar)


def epn_diffusion(basis, w_bar, aggregate, l_bar):
    return project_large(basis, commutator(solve_poisson(basis, w_bar), aggregate.r), l_bar)

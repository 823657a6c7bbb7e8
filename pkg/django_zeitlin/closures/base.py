from django_zeitlin.dynamics import build_noise_aggregates
from django_zeitlin.errors import InvalidSize
from django_zeitlin.spectral import project_large
from django_zeitlin.utils import closure_name


class Closure(object):
    """
    A right-hand side for the Heun integrators. Stochastic closures also
    provide ``diffusion(state, aggregate)`` for one step's noise.
    """
    kind = None
    stochastic = False

    def __init__(self, basis, l_bar=None):
        self.basis = basis
        if l_bar is None:
            l_bar = basis.n - 1
        if not 1 <= l_bar <= basis.n - 1:
            raise InvalidSize('l_bar=%s is outside [1, %s]' % (l_bar, basis.n - 1))
        self.l_bar = l_bar

    @property
    def n(self):
        return self.basis.n

    @property
    def name(self):
        if self.kind is None:
            return type(self).__name__
        return closure_name(self.kind)

    def project(self, w):
        return project_large(self.basis, w, self.l_bar)

    def drift(self, w):
        raise NotImplementedError

    def aggregate(self, increments, h=None, seed=None, step=None):
        return build_noise_aggregates(self.basis, increments, self.l_bar, h=h, seed=seed, step=step)

    def __repr__(self):
        return '%s(n=%d, l_bar=%d)' % (type(self).__name__, self.n, self.l_bar)

from django_zeitlin.closures.base import Closure
from django_zeitlin.dynamics import reduced_drift
from django_zeitlin.utils import CLOSURE


class DeterministicReduced(Closure):
    """Truncated large-scale dynamics; the zero-noise limit of both stochastic closures."""
    kind = CLOSURE.deterministic

    def drift(self, w):
        return reduced_drift(self.basis, w, self.l_bar)

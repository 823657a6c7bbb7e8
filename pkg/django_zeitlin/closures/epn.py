from django_zeitlin.closures.deterministic import DeterministicReduced
from django_zeitlin.dynamics import epn_diffusion
from django_zeitlin.utils import CLOSURE


class EnergyPreservingReduced(DeterministicReduced):
    """
    Energy-preserving noise: the large-scale stream function stirs the
    small-scale vorticity, pi[P_bar, r]. Energy is conserved, enstrophy is not.
    """
    kind = CLOSURE.epn
    stochastic = True

    def diffusion(self, w, aggregate):
        return epn_diffusion(self.basis, w, aggregate, self.l_bar)

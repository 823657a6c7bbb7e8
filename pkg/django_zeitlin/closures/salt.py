from django_zeitlin.closures.deterministic import DeterministicReduced
from django_zeitlin.dynamics import salt_diffusion
from django_zeitlin.utils import CLOSURE


class SaltReduced(DeterministicReduced):
    """
    Transport noise: the small scales advect the large-scale vorticity,
    pi[q, W_bar]. It conserves enstrophy; the projection pi breaks the
    higher Casimirs.
    """
    kind = CLOSURE.salt
    stochastic = True

    def diffusion(self, w, aggregate):
        return salt_diffusion(self.basis, w, aggregate, self.l_bar)

from django_zeitlin.closures.dns import FullDNS
from django_zeitlin.closures.deterministic import DeterministicReduced
from django_zeitlin.closures.salt import SaltReduced
from django_zeitlin.closures.epn import EnergyPreservingReduced
from django_zeitlin.utils import CLOSURE, parse_closure

CLOSURES = {
    CLOSURE.dns: FullDNS,
    CLOSURE.deterministic: DeterministicReduced,
    CLOSURE.salt: SaltReduced,
    CLOSURE.epn: EnergyPreservingReduced,
}


def get_closure(closure, basis, l_bar=None):
    return CLOSURES[parse_closure(closure)](basis, l_bar)

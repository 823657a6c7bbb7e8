from django_zeitlin.closures.base import Closure
from django_zeitlin.dynamics import dns_vector_field
from django_zeitlin.utils import CLOSURE


class FullDNS(Closure):
    kind = CLOSURE.dns

    def __init__(self, basis, l_bar=None):
        # the resolved run keeps every mode
        super(FullDNS, self).__init__(basis, basis.n - 1)

    def project(self, w):
        return w.copy()

    def drift(self, w):
        return dns_vector_field(self.basis, w)

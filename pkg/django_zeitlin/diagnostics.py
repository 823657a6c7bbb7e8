"""
Spectra, invariants, scale-to-scale energy transfer and the statistics
built on top of them.
"""
import logging
from collections import OrderedDict, namedtuple

import numpy as np

from .dynamics import commutator
from .errors import DegenerateInput, InsufficientData, InvalidSize
from .spectral import analyze, project_large, solve_poisson

logger = logging.getLogger(__name__)

Invariants = namedtuple('Invariants', 'energy enstrophy casimirs angular_momentum')
KinkResult = namedtuple('KinkResult', 'l_bar residual single_residual has_kink')

COUPLINGS = ('Pbar_Wbar', 'Pbar_Wtilde', 'Ptilde_Wbar', 'Ptilde_Wtilde')


def _per_degree(basis, weights):
    degrees = np.repeat(np.arange(1, basis.n), 2 * np.arange(1, basis.n) + 1)
    return np.bincount(degrees - 1, weights=weights, minlength=basis.n - 1)


def energy_spectrum(basis, w):
    """E(l) = sum_m (omega^{lm})^2 / (2 l (l + 1)) for l = 1 .. N - 1."""
    c = analyze(basis, w, basis.n - 1)
    degrees = c.degrees()
    return _per_degree(basis, c.values ** 2 / (2.0 * degrees * (degrees + 1)))


def invariants(basis, w, casimir_order=4):
    """
    Energy, enstrophy -Tr(W^2), Casimirs Tr(W^k) for 2 <= k <= casimir_order
    and the l = 1 coefficients (m = -1, 0, 1).
    """
    if not 2 <= casimir_order <= basis.n:
        raise ValueError('Casimir order must be in [2, %d], got %s' % (basis.n, casimir_order))
    casimirs = OrderedDict()
    power = w
    for k in range(2, casimir_order + 1):
        power = power @ w
        casimirs[k] = complex(np.trace(power))
    c = analyze(basis, w, 1)
    return Invariants(
        energy=float(energy_spectrum(basis, w).sum()),
        enstrophy=float(-casimirs[2].real),
        casimirs=casimirs,
        angular_momentum=c.values.copy(),
    )


class TransferReport(object):
    """
    dE(l)/dt split into the four couplings between the large (bar) and small
    (tilde) parts of P and W. ``flux`` holds the absolute values F(l).
    ``kind`` is 'instantaneous' or 'time-averaged'.
    """

    def __init__(self, l_bar, couplings, total, kind='instantaneous', flux=None, total_flux=None):
        self.l_bar = l_bar
        self.couplings = couplings
        self.total = total
        self.kind = kind
        self.flux = flux if flux is not None else OrderedDict((k, np.abs(v)) for k, v in couplings.items())
        self.total_flux = total_flux if total_flux is not None else np.abs(total)

    def rows(self):
        for name, values in list(self.couplings.items()) + [('total', self.total)]:
            for l, value in enumerate(values, 1):
                yield l, name, value
        for name, values in list(self.flux.items()) + [('total', self.total_flux)]:
            for l, value in enumerate(values, 1):
                yield l, 'F:%s' % name, value


def _transfer(basis, omega, degrees, p, w):
    c = analyze(basis, commutator(p, w), basis.n - 1)
    return _per_degree(basis, omega * c.values / (degrees * (degrees + 1.0)))


def energy_transfer(basis, w, l_bar):
    w_bar = project_large(basis, w, l_bar)
    w_tilde = w - w_bar
    p_bar = solve_poisson(basis, w_bar)
    p_tilde = solve_poisson(basis, w_tilde)
    c = analyze(basis, w, basis.n - 1)
    degrees = c.degrees()
    pairs = ((p_bar, w_bar), (p_bar, w_tilde), (p_tilde, w_bar), (p_tilde, w_tilde))
    couplings = OrderedDict(
        (name, _transfer(basis, c.values, degrees, p, v)) for name, (p, v) in zip(COUPLINGS, pairs))
    total = _transfer(basis, c.values, degrees, p_bar + p_tilde, w)
    return TransferReport(l_bar, couplings, total)


def time_averaged_transfer(basis, states, l_bar):
    reports = [energy_transfer(basis, w, l_bar) for w in states]
    if not reports:
        raise InsufficientData('No states to average')
    couplings = OrderedDict((k, np.mean([r.couplings[k] for r in reports], axis=0)) for k in COUPLINGS)
    flux = OrderedDict((k, np.mean([r.flux[k] for r in reports], axis=0)) for k in COUPLINGS)
    return TransferReport(
        l_bar, couplings, np.mean([r.total for r in reports], axis=0), kind='time-averaged',
        flux=flux, total_flux=np.mean([r.total_flux for r in reports], axis=0))


class SpectrumSeries(object):
    """Energy spectra E(l), l = 1 .. N - 1, recorded at increasing times."""

    def __init__(self, times=None, values=None):
        self.times = list(times or [])
        self.values = [np.asarray(v, dtype=float) for v in (values or [])]

    def append(self, time, spectrum):
        self.times.append(float(time))
        self.values.append(np.asarray(spectrum, dtype=float))

    def extend(self, other):
        for time, spectrum in zip(other.times, other.values):
            if self.times and time <= self.times[-1]:
                continue
            self.append(time, spectrum)

    def __len__(self):
        return len(self.times)

    def as_arrays(self):
        return np.array(self.times), np.array(self.values)

    def until(self, time):
        keep = [i for i, t in enumerate(self.times) if t <= time]
        return SpectrumSeries([self.times[i] for i in keep], [self.values[i] for i in keep])

    def mean(self, start=None):
        times, values = self.as_arrays()
        if start is not None:
            values = values[times >= start]
        if not len(values):
            raise InsufficientData('No spectra after t=%s' % start)
        return values.mean(axis=0)

    @property
    def final(self):
        return self.values[-1]


def _line_residual(x, y):
    design = np.stack([x, np.ones_like(x)], axis=1)
    coefficients = np.linalg.lstsq(design, y, rcond=None)[0]
    return float(np.sum((y - design @ coefficients) ** 2))


def detect_kink(spectrum, search_range=None, min_improvement=0.5):
    """
    Fits two log-log lines meeting at a shared degree b and returns the b
    with the smallest total residual, smaller b winning ties. ``has_kink``
    is False when the two-segment fit does not beat a single line by
    ``min_improvement``.
    """
    spectrum = np.asarray(spectrum, dtype=float)
    n = spectrum.size + 1
    lo, hi = search_range or (4, n // 2)
    if lo < 2 or hi > n - 2 or lo >= hi:
        raise InvalidSize('Search range [%s, %s] is outside [2, %s]' % (lo, hi, n - 2))
    degrees = np.arange(lo, hi + 1)
    energies = spectrum[degrees - 1]
    if np.any(energies <= 0):
        raise DegenerateInput('Spectrum must be positive on [%d, %d]' % (lo, hi))
    x, y = np.log(degrees), np.log(energies)
    if x.size < 5:
        raise InsufficientData('Need at least 5 degrees to place a breakpoint, got %d' % x.size)

    best, best_residual = None, np.inf
    for k in range(2, x.size - 2):
        residual = _line_residual(x[:k + 1], y[:k + 1]) + _line_residual(x[k:], y[k:])
        if residual < best_residual:
            best, best_residual = int(degrees[k]), residual
    single = _line_residual(x, y)
    spread = float(np.sum((y - y.mean()) ** 2))
    has_kink = single > 1e-12 * max(spread, 1e-300) and best_residual <= (1 - min_improvement) * single
    return KinkResult(best, best_residual, single, bool(has_kink))


def _log_window_mean(times, values, start, stop):
    selected = values[(times > start) & (times <= stop)]
    if not len(selected):
        raise InsufficientData('No spectra in (%s, %s]' % (start, stop))
    return selected


def stationarity_distance(series, window):
    times, values = series.as_arrays()
    if not len(times) or times[-1] - times[0] < 2 * window:
        raise InsufficientData('Series must span two windows of %s' % window)
    end = times[-1]
    recent = _log_window_mean(times, values, end - window, end)
    previous = _log_window_mean(times, values, end - 2 * window, end - window)
    positive = np.all(recent > 0, axis=0) & np.all(previous > 0, axis=0)
    a = np.log(recent[:, positive]).mean(axis=0)
    b = np.log(previous[:, positive]).mean(axis=0)
    return float(np.linalg.norm(a - b) / np.linalg.norm(b))


def stationarity(series, window, tol=0.05):
    """True when the mean log spectra of the last two windows differ by at most ``tol`` (relative L2)."""
    return stationarity_distance(series, window) <= tol


def time_to_stationarity(series, window, tol=0.05):
    """Earliest sample time at which the series up to that time is stationary, or None."""
    if not len(series):
        return None
    start = series.times[0]
    for time in series.times:
        if time - start < 2 * window:
            continue
        if stationarity(series.until(time), window, tol):
            return time
    return None


def spectrum_distance(e1, e2, l_max):
    """RMS difference of log E over 1 <= l <= l_max."""
    a = np.asarray(e1, dtype=float)[:l_max]
    b = np.asarray(e2, dtype=float)[:l_max]
    if a.size < l_max or b.size < l_max:
        raise InvalidSize('Spectra are shorter than l_max=%d' % l_max)
    if np.any(a <= 0) or np.any(b <= 0):
        raise DegenerateInput('Spectra must be positive on [1, %d]' % l_max)
    return float(np.sqrt(np.mean((np.log(a) - np.log(b)) ** 2)))


def spectrum_slope(spectrum, l_lo, l_hi):
    degrees = np.arange(l_lo, l_hi + 1)
    energies = np.asarray(spectrum, dtype=float)[degrees - 1]
    if degrees.size < 2 or np.any(energies <= 0):
        raise DegenerateInput('Need two positive values to fit a slope')
    return float(np.polyfit(np.log(degrees), np.log(energies), 1)[0])


def pile_up_ratio(reference, candidate, l_bar, width=4):
    """Energy of ``candidate`` over ``reference`` in the last ``width`` degrees up to l_bar."""
    lo = max(1, l_bar - width + 1)
    ref = np.asarray(reference)[lo - 1:l_bar].sum()
    if ref <= 0:
        raise DegenerateInput('Reference has no energy near l_bar=%d' % l_bar)
    return float(np.asarray(candidate)[lo - 1:l_bar].sum() / ref)

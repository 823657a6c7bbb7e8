"""
Continuous real spherical harmonics on a Gauss-Legendre grid and the
bracket-consistency check between the sphere and su(N).

Harmonics are orthonormal on the unit sphere and carry no Condon-Shortley
phase: Y_l0 = P_l0(cos theta), Y_lm = sqrt(2) P_lm cos(m phi) and
Y_l,-m = sqrt(2) P_lm sin(m phi) for m > 0.
"""
import logging

import numpy as np
from numpy.polynomial.legendre import leggauss

from .dynamics import commutator
from .errors import InvalidSize, QuadratureError
from .spectral import CoeffField, build_basis, mode_index, synthesize

logger = logging.getLogger(__name__)

# p_N(Y_lm) = QUANTIZATION_SCALE * T_lm, fixed by matching the l = 1 algebra
# {Y_1a, Y_1b} with N^{3/2} [T_1a, T_1b] as N grows
QUANTIZATION_SCALE = 1.0 / (4.0 * np.sqrt(np.pi))

POWER_ITERATION_TOL = 1e-8
POWER_ITERATION_MAX = 1000


def gauss_grid(n_theta, n_phi):
    """
    Returns (theta, phi, weights). Colatitudes are Gauss-Legendre nodes in
    cos(theta), ordered north to south; longitudes are equispaced from 0.
    """
    if n_theta < 1 or n_phi < 1:
        raise QuadratureError('Grid needs at least one node per axis, got %sx%s' % (n_theta, n_phi))
    nodes, weights = leggauss(n_theta)
    theta = np.arccos(nodes[::-1])
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    return theta, phi, weights[::-1].copy()


def legendre_table(l_max, theta):
    """Normalized associated Legendre functions, shape (l_max + 1, l_max + 1, len(theta))."""
    x = np.cos(theta)
    s = np.sin(theta)
    table = np.zeros((l_max + 1, l_max + 1, x.size))
    table[0, 0] = 1.0 / np.sqrt(4 * np.pi)
    for m in range(1, l_max + 1):
        table[m, m] = np.sqrt((2 * m + 1) / (2.0 * m)) * s * table[m - 1, m - 1]
    for m in range(l_max):
        table[m + 1, m] = np.sqrt(2 * m + 3.0) * x * table[m, m]
    for m in range(l_max + 1):
        for l in range(m + 2, l_max + 1):
            a = np.sqrt((4.0 * l * l - 1) / (l * l - m * m))
            b = np.sqrt(((l - 1.0) ** 2 - m * m) / (4.0 * (l - 1) ** 2 - 1))
            table[l, m] = a * (x * table[l - 1, m] - b * table[l - 2, m])
    return table


def legendre_theta_derivative(table, theta):
    l_max = table.shape[0] - 1
    x = np.cos(theta)
    s = np.sin(theta)
    derivative = np.zeros_like(table)
    for l in range(1, l_max + 1):
        for m in range(l + 1):
            derivative[l, m] = l * x * table[l, m]
            if m < l:
                derivative[l, m] -= np.sqrt((2 * l + 1.0) * (l * l - m * m) / (2 * l - 1)) * table[l - 1, m]
            derivative[l, m] /= s
    return derivative


def _grid_sum(c, table, phi, phi_derivative=False):
    values = np.zeros((table.shape[2], phi.size))
    for m in range(c.l_max + 1):
        ls = np.arange(max(m, 1), c.l_max + 1)
        if ls.size == 0:
            continue
        rows = table[ls, m]
        if m == 0:
            if not phi_derivative:
                values += (c.values[ls * ls + ls - 1] @ rows)[:, None]
            continue
        cosine = np.sqrt(2) * c.values[ls * ls + ls + m - 1] @ rows
        sine = np.sqrt(2) * c.values[ls * ls + ls - m - 1] @ rows
        if phi_derivative:
            cosine, sine = m * sine, -m * cosine
        values += np.outer(cosine, np.cos(m * phi)) + np.outer(sine, np.sin(m * phi))
    return values


def sph_evaluate(c, n_theta, n_phi):
    """Values of sum omega^{lm} Y_lm on the (n_theta, n_phi) Gauss grid, north first."""
    theta, phi, _ = gauss_grid(n_theta, n_phi)
    return _grid_sum(c, legendre_table(c.l_max, theta), phi)


def sph_analyze(values, l_max, n=None):
    values = np.asarray(values, dtype=float)
    n_theta, n_phi = values.shape
    if n_theta < l_max + 1 or n_phi < 2 * l_max + 1:
        raise QuadratureError('A %dx%d grid cannot resolve degree %d' % (n_theta, n_phi, l_max))
    theta, phi, weights = gauss_grid(n_theta, n_phi)
    table = legendre_table(l_max, theta)
    field = CoeffField(n, l_max)
    step = 2 * np.pi / n_phi
    for m in range(l_max + 1):
        ls = np.arange(max(m, 1), l_max + 1)
        if ls.size == 0:
            continue
        weighted = table[ls, m] * weights
        cosine = values @ np.cos(m * phi) * step
        if m == 0:
            field.values[ls * ls + ls - 1] = weighted @ cosine
            continue
        sine = values @ np.sin(m * phi) * step
        field.values[ls * ls + ls + m - 1] = np.sqrt(2) * weighted @ cosine
        field.values[ls * ls + ls - m - 1] = np.sqrt(2) * weighted @ sine
    return field


def poisson_bracket_grid(psi, omega, n_theta, n_phi):
    """{psi, omega} = (psi_theta omega_phi - psi_phi omega_theta) / sin(theta) on the grid."""
    theta, phi, _ = gauss_grid(n_theta, n_phi)
    l_max = max(psi.l_max, omega.l_max)
    table = legendre_table(l_max, theta)
    derivative = legendre_theta_derivative(table, theta)
    # the lower-degree field is zero-padded, so its target size has to grow with it
    n = max(psi.n, omega.n, l_max + 1)
    psi, omega = psi.resized(l_max, n=n), omega.resized(l_max, n=n)
    psi_theta = _grid_sum(psi, derivative, phi)
    psi_phi = _grid_sum(psi, table, phi, phi_derivative=True)
    omega_theta = _grid_sum(omega, derivative, phi)
    omega_phi = _grid_sum(omega, table, phi, phi_derivative=True)
    return (psi_theta * omega_phi - psi_phi * omega_theta) / np.sin(theta)[:, None]


def quantize(basis, c):
    return QUANTIZATION_SCALE * synthesize(basis, c.truncate_to(basis.n))


def operator_norm(a, seed=0):
    """Largest singular value by power iteration on a^dagger a."""
    a = np.asarray(a)
    if not np.any(a):
        return 0.0
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(a.shape[1]) + 1j * rng.standard_normal(a.shape[1])
    x /= np.linalg.norm(x)
    estimate = 0.0
    for _ in range(POWER_ITERATION_MAX):
        y = a.conj().T @ (a @ x)
        value = np.linalg.norm(y)
        if value == 0:
            return 0.0
        x = y / value
        if abs(value - estimate) <= POWER_ITERATION_TOL * value:
            estimate = value
            break
        estimate = value
    return float(np.sqrt(estimate))


def bracket_consistency(psi, omega, n_list, n_theta=None, n_phi=None):
    """
    Operator norm of p_N({psi, omega}) - N^{3/2} [p_N psi, p_N omega] for
    each N in ``n_list``. The continuous bracket is computed on a grid fine
    enough to be exact for band-limited inputs.
    """
    n_list = list(n_list)
    if not n_list:
        raise ValueError('n_list must name at least one matrix size')
    l_max = max(psi.l_max, omega.l_max)
    if l_max > min(n_list) - 1:
        raise InvalidSize('Degree %d does not fit in N=%d' % (l_max, min(n_list)))
    if psi.l_max == 0 or omega.l_max == 0:
        return [0.0 for _ in n_list]

    l_bracket = psi.l_max + omega.l_max - 1
    n_theta = n_theta or 2 * l_bracket + 2
    n_phi = n_phi or max(4 * l_max, 2 * l_bracket + 1)
    if n_theta < l_bracket + 1 or n_phi < 2 * l_bracket + 1:
        raise QuadratureError('A %dx%d grid cannot resolve the bracket of degree %d' % (n_theta, n_phi, l_bracket))

    bracket = sph_analyze(poisson_bracket_grid(psi, omega, n_theta, n_phi), l_bracket)
    discrepancies = []
    for n in n_list:
        basis = build_basis(n)
        lhs = quantize(basis, bracket)
        rhs = n ** 1.5 * commutator(quantize(basis, psi), quantize(basis, omega))
        discrepancies.append(operator_norm(lhs - rhs))
        logger.debug('Bracket discrepancy at N=%d: %g', n, discrepancies[-1])
    return discrepancies


def harmonic(l, m, l_max=None):
    """A single Y_lm as a coefficient field."""
    c = CoeffField(None, l_max or l)
    c.values[mode_index(l, m)] = 1.0
    return c

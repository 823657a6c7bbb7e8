"""
Quantized spherical harmonics on su(N).

The discrete Laplacian is the Casimir -sum_a ad^2(S_a) of the spin
s = (N - 1) / 2 representation. It maps the m-th diagonal of a matrix onto
itself through a real symmetric tridiagonal operator L_m, so every basis
element T_lm lives on the +m and -m diagonals and is built from the
eigenvectors of L_m.
"""
import logging

import numpy as np
from scipy.linalg import eigh_tridiagonal, solve_banded

from .errors import DegenerateInput, InvalidSize

logger = logging.getLogger(__name__)

SQRT2 = np.sqrt(2.0)

# Relative tolerance for the trace-free precondition of the Poisson solve
TRACE_TOLERANCE = 1e-10

# Eigenvector entries below this fraction of the column maximum are ignored
# when fixing the sign convention
SIGN_THRESHOLD = 1e-8


def mode_count(l_max):
    return l_max * (l_max + 2)


def mode_index(l, m):
    return l * l + l + m - 1


class CoeffField(object):
    """
    Real coefficients omega^{lm}, 1 <= l <= l_max, -l <= m <= l, stored flat
    in (l, m) order. Positive m indexes the cosine-type element, negative m
    the sine-type one.
    """

    def __init__(self, n, l_max, values=None):
        if n is None:
            n = l_max + 1
        if l_max < 0 or l_max > n - 1:
            raise InvalidSize('l_max=%s is outside [0, %s]' % (l_max, n - 1))
        self.n = n
        self.l_max = l_max
        size = mode_count(l_max)
        if values is None:
            values = np.zeros(size)
        else:
            values = np.array(values, dtype=float).ravel()
            if values.size != size:
                raise InvalidSize('Expected %d coefficients for l_max=%d, got %d' % (size, l_max, values.size))
        self.values = values

    @classmethod
    def from_mapping(cls, n, l_max, mapping, l_min=1):
        field = cls(n, l_max)
        for (l, m), value in mapping.items():
            if not l_min <= l <= l_max or not -l <= m <= l:
                raise InvalidSize('Mode (%s, %s) is outside l in [%s, %s]' % (l, m, l_min, l_max))
            field.values[mode_index(l, m)] = value
        return field

    def _check_mode(self, l, m):
        if not 1 <= l <= self.l_max or not -l <= m <= l:
            raise KeyError('(%s, %s) is not a mode of this field' % (l, m))

    def __getitem__(self, key):
        l, m = key
        self._check_mode(l, m)
        return self.values[mode_index(l, m)]

    def __setitem__(self, key, value):
        l, m = key
        self._check_mode(l, m)
        self.values[mode_index(l, m)] = value

    def __len__(self):
        return self.values.size

    def modes(self, l_min=1):
        for l in range(max(l_min, 1), self.l_max + 1):
            for m in range(-l, l + 1):
                yield l, m

    def degrees(self):
        ls = np.arange(1, self.l_max + 1)
        return np.repeat(ls, 2 * ls + 1)

    def as_mapping(self, l_min=1):
        return dict(((l, m), self.values[mode_index(l, m)]) for l, m in self.modes(l_min))

    def copy(self):
        return CoeffField(self.n, self.l_max, self.values.copy())

    def resized(self, l_max, n=None):
        """
        Returns a copy truncated or zero-padded to ``l_max``. ``n`` changes
        the matrix size the field is meant for.
        """
        n = self.n if n is None else n
        values = np.zeros(mode_count(l_max))
        keep = mode_count(min(l_max, self.l_max))
        values[:keep] = self.values[:keep]
        return CoeffField(n, l_max, values)

    def restrict(self, l_max):
        if l_max > self.l_max:
            raise InvalidSize('Cannot restrict l_max=%d to %d' % (self.l_max, l_max))
        return self.resized(l_max)

    def pad(self, l_max):
        if l_max < self.l_max:
            raise InvalidSize('Cannot pad l_max=%d to %d' % (self.l_max, l_max))
        return self.resized(l_max)

    def truncate_to(self, n):
        # p_N keeps only the degrees a matrix of size n can represent
        return self.resized(min(self.l_max, n - 1), n=n)

    def __repr__(self):
        return 'CoeffField(n=%d, l_max=%d)' % (self.n, self.l_max)


class BasisCache(object):
    """
    Per-diagonal eigen-decompositions of the discrete Laplacian.

    ``vectors[m][:, k]`` is the eigenvector of L_m with eigenvalue
    ``eigenvalues[m][k] = -l (l + 1)``, l = m + k. ``ladder[i]`` holds
    c_{i+1} = sqrt(i (N - i)), so ``ladder[0] == ladder[n] == 0``.
    Instances are read-only once built.
    """

    def __init__(self, n, ladder, vectors, eigenvalues, bands, weights, up, down):
        self.n = n
        self.ladder = ladder
        self.vectors = vectors
        self.eigenvalues = eigenvalues
        self.bands = bands
        self.weights = weights
        self.up = up
        self.down = down
        for array in [ladder, weights, up, down] + list(vectors) + list(eigenvalues) + list(bands):
            array.flags.writeable = False

    def operator(self, m):
        """Dense L_m, mostly useful for checking the decomposition."""
        band = self.bands[m]
        size = band.shape[1]
        dense = np.diag(band[1])
        if size > 1:
            dense += np.diag(band[0, 1:], 1) + np.diag(band[2, :-1], -1)
        return dense

    def degree_eigenvalues(self):
        ls = np.arange(1, self.n)
        return -ls * (ls + 1.0)

    def __repr__(self):
        return 'BasisCache(n=%d)' % self.n


def _fix_signs(vectors):
    for k in range(vectors.shape[1]):
        column = vectors[:, k]
        significant = np.nonzero(np.abs(column) > SIGN_THRESHOLD * np.abs(column).max())[0]
        if column[significant[0]] < 0:
            vectors[:, k] = -column
    return vectors


def build_basis(n):
    if n < 2:
        raise InvalidSize('Matrix size must be at least 2, got %s' % n)

    i = np.arange(n + 1)
    ladder = np.sqrt(i * (n - i.astype(float)))
    squared = ladder ** 2
    half = (squared[:n] + squared[1:]) / 2

    rows = np.arange(n)
    weights = (rows[None, :] - rows[:, None]) ** 2 + half[:, None] + half[None, :]
    up = ladder[1:, None] * ladder[None, 1:]
    down = ladder[:n, None] * ladder[None, :n]

    vectors, eigenvalues, bands = [], [], []
    for m in range(n):
        size = n - m
        diagonal = -weights[np.arange(size), np.arange(size) + m]
        coupling = ladder[1:size] * ladder[1 + m:size + m]

        band = np.zeros((3, size))
        band[1] = diagonal
        band[0, 1:] = coupling
        band[2, :-1] = coupling
        bands.append(band)

        if size == 1:
            values, table = diagonal.copy(), np.ones((1, 1))
        else:
            values, table = eigh_tridiagonal(diagonal, coupling)
        # ascending eigenvalues run from l = n - 1 down to l = m
        eigenvalues.append(values[::-1].copy())
        vectors.append(_fix_signs(np.ascontiguousarray(table[:, ::-1])))

    logger.debug('Built quantized harmonic basis for N=%d', n)
    return BasisCache(n, ladder, vectors, eigenvalues, bands, weights, up, down)


def spin_matrices(n):
    """Standard spin-s matrices S_1, S_2, S_3 with s = (n - 1) / 2 and [S_1, S_2] = i S_3."""
    s = (n - 1) / 2.0
    i = np.arange(n)
    s3 = np.diag(s - i).astype(complex)
    raising = np.zeros((n, n), dtype=complex)
    raising[i[:-1], i[1:]] = np.sqrt(i[1:] * (n - i[1:].astype(float)))
    lowering = raising.conj().T
    return (raising + lowering) / 2, (raising - lowering) / 2j, s3


def dense_laplacian(n):
    """
    The n^2 x n^2 operator W -> -sum_a [S_a, [S_a, W]] acting on row-major
    flattened matrices.
    """
    identity = np.eye(n)
    operator = np.zeros((n * n, n * n), dtype=complex)
    for spin in spin_matrices(n):
        ad = np.kron(spin, identity) - np.kron(identity, spin.T)
        operator -= ad @ ad
    return operator


def inner(a, b):
    """Real part of the Frobenius inner product Tr(a^dagger b)."""
    return np.vdot(a, b).real


def is_vorticity(w, tol=1e-10):
    scale = np.linalg.norm(w)
    if scale == 0:
        return True
    skew = np.linalg.norm(w + w.conj().T) <= tol * scale
    return skew and abs(np.trace(w)) <= tol * scale


def _check_matrix(basis, w):
    w = np.asarray(w)
    if w.shape != (basis.n, basis.n):
        raise InvalidSize('Expected a %dx%d matrix, got shape %s' % (basis.n, basis.n, w.shape))
    return w


def laplacian_apply(basis, w):
    w = _check_matrix(basis, w)
    padded = np.pad(w, 1)
    return -basis.weights * w + basis.up * padded[2:, 2:] + basis.down * padded[:-2, :-2]


def solve_poisson(basis, w):
    """
    Returns the trace-free P with laplacian_apply(basis, P) == w. Diagonals
    m >= 1 are solved as tridiagonal systems, the main diagonal in the stored
    eigenbasis with the l = 0 kernel removed.
    """
    w = _check_matrix(basis, w)
    n = basis.n
    p = np.zeros((n, n), dtype=complex)
    scale = np.linalg.norm(w)
    if scale == 0:
        return p
    if abs(np.trace(w)) > TRACE_TOLERANCE * scale:
        raise DegenerateInput('The Poisson equation has no solution for a matrix with non-zero trace')

    table = basis.vectors[0]
    coefficients = table.T @ np.diagonal(w)
    eigenvalues = basis.eigenvalues[0].copy()
    coefficients[0] = 0.0
    eigenvalues[0] = 1.0
    p[np.diag_indices(n)] = table @ (coefficients / eigenvalues)

    for m in range(1, n):
        rows = np.arange(n - m)
        rhs = np.stack([w[rows, rows + m], w[rows + m, rows]], axis=1)
        solution = solve_banded((1, 1), basis.bands[m], rhs)
        p[rows, rows + m] = solution[:, 0]
        p[rows + m, rows] = solution[:, 1]
    return p


def _check_degree(basis, l_max, name='l_max'):
    if not 1 <= l_max <= basis.n - 1:
        raise InvalidSize('%s=%s is outside [1, %s]' % (name, l_max, basis.n - 1))


def analyze(basis, w, l_max):
    """
    Coefficients <T_lm, w> for l <= l_max under Re Tr(a^dagger b). Only the
    diagonals |m| <= l_max are read, so the cost is O(N l_max^2).
    """
    w = _check_matrix(basis, w)
    _check_degree(basis, l_max)
    n = basis.n
    values = np.zeros(mode_count(l_max))

    ls = np.arange(1, l_max + 1)
    values[ls * ls + ls - 1] = basis.vectors[0][:, 1:l_max + 1].T @ np.diagonal(w).imag

    for m in range(1, l_max + 1):
        rows = np.arange(n - m)
        upper = w[rows, rows + m]
        lower = w[rows + m, rows]
        table = basis.vectors[m][:, :l_max - m + 1]
        ls = np.arange(m, l_max + 1)
        values[ls * ls + ls + m - 1] = table.T @ (upper.real - lower.real) / SQRT2
        values[ls * ls + ls - m - 1] = table.T @ (upper.imag + lower.imag) / SQRT2
    return CoeffField(n, l_max, values)


def synthesize(basis, c):
    if c.n != basis.n:
        raise InvalidSize('Coefficient field is for N=%d, basis is N=%d' % (c.n, basis.n))
    n, l_max = basis.n, c.l_max
    w = np.zeros((n, n), dtype=complex)
    if l_max == 0:
        return w

    ls = np.arange(1, l_max + 1)
    w[np.diag_indices(n)] = 1j * (basis.vectors[0][:, 1:l_max + 1] @ c.values[ls * ls + ls - 1])

    for m in range(1, l_max + 1):
        rows = np.arange(n - m)
        ls = np.arange(m, l_max + 1)
        combined = c.values[ls * ls + ls + m - 1] + 1j * c.values[ls * ls + ls - m - 1]
        upper = basis.vectors[m][:, :l_max - m + 1] @ combined / SQRT2
        w[rows, rows + m] = upper
        w[rows + m, rows] = -upper.conj()
    return w


def basis_element(basis, l, m):
    c = CoeffField(basis.n, l)
    c[l, m] = 1.0
    return synthesize(basis, c)


def project_large(basis, w, l_bar):
    """
    Orthogonal projection onto the modes l <= l_bar. The result is banded
    with bandwidth l_bar; l_bar = N - 1 returns an exact copy.
    """
    w = _check_matrix(basis, w)
    _check_degree(basis, l_bar, 'l_bar')
    if l_bar == basis.n - 1:
        return np.array(w, dtype=complex)
    return synthesize(basis, analyze(basis, w, l_bar))

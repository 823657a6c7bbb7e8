import numpy as np


def random_vorticity(n, seed=0, scale=1.0):
    """A random skew-Hermitian trace-free matrix."""
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    w = (x - x.conj().T) / 2
    w[np.diag_indices(n)] -= np.trace(w) / n
    return scale * w


def power_law(n, slope, l_break=None, slope_after=None):
    degrees = np.arange(1, n, dtype=float)
    spectrum = degrees ** slope
    if l_break is not None:
        after = degrees > l_break
        spectrum[after] = l_break ** slope * (degrees[after] / l_break) ** slope_after
    return spectrum

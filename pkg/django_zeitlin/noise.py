"""
Per-mode Brownian noise fitted to the small scales of a resolved run.
"""
import csv
import logging

import numpy as np

from .errors import DegenerateInput, InsufficientData, InvalidSize, NoiseModelFormatError
from .rng import normal_stream
from .spectral import CoeffField, analyze, mode_count, mode_index

logger = logging.getLogger(__name__)

MIN_SAMPLES = 30
SPACING_TOLERANCE = 1e-9
HEADER = '# django_zeitlin noise model'


class CoeffTimeSeries(object):
    """Full coefficient vectors (l <= N - 1) sampled at uniformly spaced times."""

    def __init__(self, n, times, values):
        self.n = n
        self.times = np.asarray(times, dtype=float)
        self.values = np.asarray(values, dtype=float)
        if self.values.shape != (self.times.size, mode_count(n - 1)):
            raise InvalidSize('Expected %d samples of %d coefficients, got shape %s' % (
                self.times.size, mode_count(n - 1), self.values.shape))

    def __len__(self):
        return self.times.size

    @property
    def spacing(self):
        steps = np.diff(self.times)
        if steps.size == 0:
            raise InsufficientData('A single sample has no spacing')
        if np.any(np.abs(steps - steps[0]) > SPACING_TOLERANCE * abs(steps[0])) or steps[0] <= 0:
            raise DegenerateInput('Samples must be uniformly spaced in time')
        return float(steps[0])

    def mode(self, l, m):
        return self.values[:, mode_index(l, m)]


def coefficient_series(basis, states, times, l_bar=None):
    """Analyzes each state; with ``l_bar`` the modes l <= l_bar are zeroed."""
    values = [analyze(basis, w, basis.n - 1).values for w in states]
    values = np.array(values).reshape(len(values), mode_count(basis.n - 1))
    if l_bar is not None:
        values[:, :mode_count(l_bar)] = 0.0
    return CoeffTimeSeries(basis.n, times, values)


class NoiseModel(object):
    """
    Drift ``mu`` and volatility ``sigma`` per mode l > l_bar; entries for
    l <= l_bar are zero. ``dt_fit`` is the sampling interval of the fit.
    """

    def __init__(self, n, l_bar, mu, sigma, seed, dt_fit):
        self.n = n
        self.l_bar = l_bar
        self.mu = np.asarray(mu, dtype=float)
        self.sigma = np.asarray(sigma, dtype=float)
        self.seed = seed
        self.dt_fit = dt_fit

    def modes(self):
        for l in range(self.l_bar + 1, self.n):
            for m in range(-l, l + 1):
                yield l, m

    def save(self, path):
        with open(path, 'w', newline='') as handle:
            handle.write('%s\n' % HEADER)
            for key in ('n', 'l_bar', 'seed', 'dt_fit'):
                handle.write('# %s: %r\n' % (key, getattr(self, key)))
            writer = csv.writer(handle, lineterminator='\n')
            writer.writerow(['l', 'm', 'mu', 'sigma'])
            for l, m in self.modes():
                k = mode_index(l, m)
                writer.writerow([l, m, repr(float(self.mu[k])), repr(float(self.sigma[k]))])

    @classmethod
    def load(cls, path):
        header = {}
        rows = []
        with open(path, newline='') as handle:
            for line in handle:
                if line.startswith('#'):
                    if ':' in line:
                        key, value = line[1:].split(':', 1)
                        header[key.strip()] = value.strip()
                    continue
                rows.append(line)
        try:
            n, l_bar, seed = int(header['n']), int(header['l_bar']), int(header['seed'])
            dt_fit = float(header['dt_fit'])
        except (KeyError, ValueError):
            raise NoiseModelFormatError('%s is not a noise model file' % path)
        if n < 2 or not 1 <= l_bar <= n - 1:
            raise NoiseModelFormatError('%s has an invalid header (n=%d, l_bar=%d)' % (path, n, l_bar))
        mu = np.zeros(mode_count(n - 1))
        sigma = np.zeros(mode_count(n - 1))
        for row in csv.DictReader(rows):
            try:
                l, m = int(row['l']), int(row['m'])
                value = float(row['mu']), float(row['sigma'])
            except (KeyError, TypeError, ValueError):
                raise NoiseModelFormatError('%s has a malformed row: %s' % (path, row))
            if not 1 <= l <= n - 1 or not -l <= m <= l:
                raise NoiseModelFormatError('%s lists mode (%d, %d) outside N=%d' % (path, l, m, n))
            mu[mode_index(l, m)], sigma[mode_index(l, m)] = value
        return cls(n, l_bar, mu, sigma, seed, dt_fit)


def estimate_noise_model(series, l_bar, seed):
    """
    Least-squares Brownian fit of each small-scale coefficient:
    mu = mean(dx) / dt and sigma = std(dx) / sqrt(dt).
    """
    if len(series) < MIN_SAMPLES:
        raise InsufficientData('Need at least %d samples to fit noise, got %d' % (MIN_SAMPLES, len(series)))
    if not 1 <= l_bar <= series.n - 1:
        raise InvalidSize('l_bar=%s is outside [1, %s]' % (l_bar, series.n - 1))
    dt = series.spacing
    increments = np.diff(series.values, axis=0)
    small = CoeffField(series.n, series.n - 1).degrees() > l_bar
    mu = np.where(small, increments.mean(axis=0) / dt, 0.0)
    sigma = np.where(small, increments.std(axis=0, ddof=1) / np.sqrt(dt), 0.0)
    logger.info('Fitted noise for %d modes above l_bar=%d from %d samples', small.sum(), l_bar, len(series))
    return NoiseModel(series.n, l_bar, mu, sigma, seed, dt)


def sample_increments(model, h, step):
    if h <= 0:
        raise ValueError('Step size must be positive, got %s' % h)
    xi = normal_stream(model.seed, step, mode_count(model.n - 1))
    return CoeffField(model.n, model.n - 1, model.mu * h + model.sigma * np.sqrt(h) * xi)


def save_noise_model(model, path):
    model.save(path)


def load_noise_model(path):
    return NoiseModel.load(path)


def sample_increment(model, l, m, h, step):
    """The (l, m) entry of sample_increments(model, h, step)."""
    if not model.l_bar < l <= model.n - 1:
        return 0.0
    k = mode_index(l, m)
    xi = normal_stream(model.seed, step, k + 1)[k]
    return float(model.mu[k] * h + model.sigma[k] * np.sqrt(h) * xi)

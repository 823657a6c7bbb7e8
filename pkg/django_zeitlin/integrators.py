"""
Heun time stepping for the full and the reduced models.
"""
import logging

import numpy as np

from . import settings
from .diagnostics import SpectrumSeries, energy_spectrum, invariants
from .errors import BlowUp
from .noise import sample_increments

logger = logging.getLogger(__name__)


class StepperConfig(object):
    def __init__(self, h=None, t_end=None, reproject_every=None, snapshot_every=None, blowup_factor=None):
        self.h = settings.get_default_step() if h is None else h
        self.t_end = settings.get_default_t_end() if t_end is None else t_end
        self.reproject_every = reproject_every or settings.get_reproject_every()
        self.snapshot_every = snapshot_every or settings.get_snapshot_every()
        self.blowup_factor = blowup_factor or settings.get_blowup_factor()
        if not self.h > 0:
            raise ValueError('Step size must be positive, got %s' % self.h)
        if self.t_end < 0:
            raise ValueError('End time must be non-negative, got %s' % self.t_end)
        if self.reproject_every < 1 or self.snapshot_every < 1:
            raise ValueError('Cadences must be at least 1')

    @property
    def n_steps(self):
        return int(round(self.t_end / self.h))


def heun_det_step(state, h, drift):
    k1 = drift(state)
    k2 = drift(state + h * k1)
    return state + (h / 2) * (k1 + k2)


def heun_strat_step(state, h, drift, diffusion, aggregate):
    """
    Stratonovich Heun: the predictor carries the full diffusion increment and
    the corrector averages drift and diffusion over both stages. With zero
    noise this reproduces heun_det_step.
    """
    a1 = drift(state)
    g1 = diffusion(state, aggregate)
    predictor = state + h * a1 + g1
    a2 = drift(predictor)
    g2 = diffusion(predictor, aggregate)
    return state + (h / 2) * (a1 + a2) + 0.5 * (g1 + g2)


def structural_reprojection(w):
    """Nearest skew-Hermitian trace-free matrix."""
    skew = (w - w.conj().T) / 2
    skew[np.diag_indices_from(skew)] -= np.trace(skew) / w.shape[0]
    return skew


class Trajectory(object):
    def __init__(self, closure):
        self.closure = closure
        self.times = []
        self.steps = []
        self.states = []
        self.spectra = SpectrumSeries()
        self.invariants = []
        self.final_state = None

    def record(self, basis, step, time, state, keep_state, casimir_order):
        self.times.append(time)
        self.steps.append(step)
        if keep_state:
            self.states.append(state.copy())
        self.spectra.append(time, energy_spectrum(basis, state))
        self.invariants.append(invariants(basis, state, casimir_order))

    @property
    def final_time(self):
        return self.times[-1]

    def __len__(self):
        return len(self.times)


def integrate(initial, closure, config, noise=None, keep_states=True, casimir_order=None,
              start_step=0, start_time=0.0, initial_norm=None, on_snapshot=None):
    """
    Advances ``initial`` under ``closure`` and records a snapshot every
    ``config.snapshot_every`` steps and at the end. Step indices continue
    from ``start_step`` so a run split into chunks draws the same noise.
    """
    basis = closure.basis
    if closure.stochastic and noise is None:
        raise ValueError('%s needs a noise model' % type(closure).__name__)
    if not closure.stochastic and noise is not None:
        raise ValueError('%s takes no noise model' % type(closure).__name__)
    if noise is not None and (noise.n != closure.n or noise.l_bar != closure.l_bar):
        raise ValueError('Noise model is for N=%d, l_bar=%d' % (noise.n, noise.l_bar))
    casimir_order = casimir_order or min(settings.get_casimir_order(), basis.n)

    h = config.h
    state = closure.project(np.asarray(initial, dtype=complex))
    if initial_norm is None:
        initial_norm = np.linalg.norm(state)
    threshold = config.blowup_factor * max(initial_norm, np.finfo(float).tiny)
    trajectory = Trajectory(closure.name)
    trajectory.record(basis, start_step, start_time, state, keep_states, casimir_order)

    n_steps = config.n_steps
    for k in range(n_steps):
        step = start_step + k
        if closure.stochastic:
            aggregate = closure.aggregate(sample_increments(noise, h, step), h, noise.seed, step)
            new = heun_strat_step(state, h, closure.drift, closure.diffusion, aggregate)
        else:
            new = heun_det_step(state, h, closure.drift)
        if (k + 1) % config.reproject_every == 0:
            new = structural_reprojection(new)

        time = start_time + (k + 1) * h
        size = np.linalg.norm(new)
        if not np.isfinite(size) or size > threshold:
            logger.warning('%s blew up at t=%s (step %d)', trajectory.closure, time, step + 1)
            raise BlowUp('Run %s blew up at t=%s' % (trajectory.closure, time), time, step + 1, state,
                         trajectory=trajectory)
        state = new
        if (k + 1) % config.snapshot_every == 0 or k + 1 == n_steps:
            trajectory.record(basis, step + 1, time, state, keep_states, casimir_order)
            if on_snapshot is not None:
                on_snapshot(step + 1, time, state)
    trajectory.final_state = state
    return trajectory

"""
End-to-end reduction experiment: spin up a resolved run, pick the cutoff,
fit the small-scale noise, run every closure from the same large-scale
state and compare the outcomes.
"""
import os
from contextlib import contextmanager
from multiprocessing.dummy import Pool as ThreadPool

import numpy as np

from .closures import get_closure
from .diagnostics import (detect_kink, energy_transfer, pile_up_ratio, spectrum_distance, spectrum_slope,
                          stationarity, time_averaged_transfer, time_to_stationarity)
from .errors import BlowUp, InsufficientData, PipelineError
from .initial import gen_ic
from .integrators import StepperConfig, integrate
from .logutils import setup_loghandlers
from .models import Log, SimulationRun
from .noise import MIN_SAMPLES, coefficient_series, estimate_noise_model, load_noise_model
from .normality import normality_survey
from .reports import (write_distance_csv, write_invariants_csv, write_json, write_manifest,
                      write_spectrum_csv, write_transfer_csv)
from .settings import get_log_level
from .signals import run_blew_up, stage_completed, stage_failed
from .snapshots import read_snapshot, write_snapshot
from .spectral import build_basis, project_large
from .utils import CLOSURE, STAGE_STATUS, STATUS, closure_name, parse_closure

logger = setup_loghandlers("INFO")


class StageRecorder(object):
    """
    Wraps each stage so failures become PipelineError and the outcome is
    recorded as a Log row according to LOG_LEVEL.
    """

    def __init__(self, run, log_level=None):
        self.run = run
        self.log_level = get_log_level() if log_level is None else log_level
        self.completed = []

    @contextmanager
    def stage(self, name):
        logger.info('Stage %s started', name)
        try:
            yield
        except PipelineError:
            raise
        except Exception as e:
            logger.error('Stage %s failed: %s', name, e)
            self.failed(name, e)
            raise PipelineError(name, str(e)) from e
        self.completed.append(name)
        if self.log_level == 2:
            Log.objects.create(run=self.run, stage=name, status=STAGE_STATUS.completed)
        stage_completed.send(sender=self.run, stage=name)

    def failed(self, name, exception):
        if self.log_level >= 1:
            Log.objects.create(run=self.run, stage=name, status=STAGE_STATUS.failed,
                               message=str(exception), exception_type=type(exception).__name__)
        stage_failed.send(sender=self.run, stage=name, exception=exception)


def initial_state(cfg, basis):
    if 'snapshot' in cfg.initial:
        return read_snapshot(cfg.initial['snapshot']).state
    return gen_ic(cfg.n, cfg.seed, cfg.initial, basis=basis)


def burn_in(basis, w0, cfg):
    """
    Integrates the resolved model in chunks until the spectrum is stationary
    and enough snapshots are available for the noise fit, or until the
    burn-in cap. Returns (trajectory, stationary).
    """
    window, tol = cfg.burn_in['window'], cfg.burn_in['tol']
    closure = get_closure(CLOSURE.dns, basis)
    stepper = StepperConfig(h=cfg.h, t_end=cfg.burn_in['chunk'], reproject_every=cfg.reproject_every,
                            snapshot_every=cfg.snapshot_every)
    trajectory = integrate(w0, closure, stepper, casimir_order=cfg.casimir_order)
    initial_norm = np.linalg.norm(w0)
    stationary = False
    while True:
        fit_samples = len(trajectory) * cfg.fit_fraction
        span = trajectory.times[-1] - trajectory.times[0]
        if span >= 2 * window:
            stationary = stationarity(trajectory.spectra, window, tol)
        if stationary and fit_samples >= MIN_SAMPLES + 1:
            break
        if trajectory.times[-1] >= cfg.burn_in['max_time']:
            logger.warning('Burn-in reached t=%s without %s', trajectory.times[-1],
                           'enough samples' if stationary else 'stationarity')
            break
        chunk = integrate(trajectory.final_state, closure, stepper, casimir_order=cfg.casimir_order,
                          start_step=trajectory.steps[-1], start_time=trajectory.times[-1],
                          initial_norm=initial_norm)
        _append(trajectory, chunk)
    return trajectory, stationary


def _append(trajectory, chunk):
    # the first record of a chunk repeats the last record of the trajectory
    trajectory.times.extend(chunk.times[1:])
    trajectory.steps.extend(chunk.steps[1:])
    trajectory.states.extend(chunk.states[1:])
    trajectory.invariants.extend(chunk.invariants[1:])
    trajectory.spectra.extend(chunk.spectra)
    trajectory.final_state = chunk.final_state


def fallback_l_bar(n):
    return max(1, min(n - 1, int(round(np.sqrt(n)))))


def _run_closure(job):
    """Runs in a worker thread; must not touch the database."""
    name, closure, w_start, stepper, noise, casimir_order = job
    try:
        trajectory = integrate(w_start, closure, stepper, noise=noise, keep_states=False,
                               casimir_order=casimir_order)
        return name, trajectory, None
    except BlowUp as e:
        return name, e.trajectory, e


def run_pipeline(cfg, log_level=None):
    """
    Runs every stage and writes all outputs to ``cfg.out_dir``. Returns the
    SimulationRun. Stage failures are logged, recorded and re-raised as
    PipelineError after the summary and manifest are written.
    """
    out_dir = cfg.out_dir
    os.makedirs(out_dir, exist_ok=True)
    run = SimulationRun.objects.create(
        name=cfg.name, closure=CLOSURE.dns, n=cfg.n, seed=cfg.seed, h=cfg.h, t_end=cfg.t_end,
        out_dir=out_dir, config=cfg.as_dict(), status=STATUS.running)
    recorder = StageRecorder(run, log_level)
    files = []
    summary = {'n': cfg.n, 'seed': cfg.seed, 'h': cfg.h, 't_end': cfg.t_end, 'runs': {}}

    def output(name):
        files.append(name)
        return os.path.join(out_dir, name)

    logger.info('Pipeline started for N=%d, seed=%d in %s', cfg.n, cfg.seed, out_dir)
    try:
        with recorder.stage('basis'):
            basis = build_basis(cfg.n)

        with recorder.stage('initial_condition'):
            w0 = initial_state(cfg, basis)
            write_snapshot(output('initial.ezsn'), w0, CLOSURE.dns, 0, 0.0, cfg.seed)

        with recorder.stage('dns_burn_in'):
            dns, stationary = burn_in(basis, w0, cfg)
            w_stationary = dns.final_state
            write_snapshot(output('stationary.ezsn'), w_stationary, CLOSURE.dns, dns.steps[-1],
                           dns.times[-1], cfg.seed)
            write_spectrum_csv(output('burn_in_spectrum.csv'), dns.spectra)
            write_invariants_csv(output('burn_in_invariants.csv'), dns.times, dns.invariants)
            summary['burn_in'] = {
                'duration': dns.times[-1],
                'stationary': stationary,
                'time_to_stationarity': time_to_stationarity(
                    dns.spectra, cfg.burn_in['window'], cfg.burn_in['tol']),
            }

        with recorder.stage('detect_kink'):
            tail_start = dns.times[-1] - (dns.times[-1] - dns.times[0]) * cfg.fit_fraction
            mean_spectrum = dns.spectra.mean(start=tail_start)
            if cfg.l_bar == 'auto':
                kink = detect_kink(mean_spectrum, search_range=cfg.kink_range)
                l_bar = kink.l_bar if kink.has_kink else fallback_l_bar(cfg.n)
                if not kink.has_kink:
                    logger.warning('No spectral kink detected, using l_bar=%d', l_bar)
                summary['kink'] = {'l_bar': kink.l_bar, 'residual': kink.residual,
                                   'single_residual': kink.single_residual, 'has_kink': kink.has_kink}
            else:
                l_bar = cfg.l_bar
            summary['l_bar'] = l_bar
            run.l_bar = l_bar
            slope_hi = min(cfg.n - 1, max(l_bar + 2, cfg.n // 2))
            if slope_hi > l_bar + 1:
                summary['small_scale_slope'] = spectrum_slope(mean_spectrum, l_bar + 1, slope_hi)

        with recorder.stage('fit_noise'):
            tail = [i for i, t in enumerate(dns.times) if t >= tail_start]
            if len(tail) < MIN_SAMPLES:
                raise InsufficientData('Only %d snapshots in the fitting window' % len(tail))
            series = coefficient_series(basis, [dns.states[i] for i in tail], [dns.times[i] for i in tail], l_bar)
            if cfg.noise_model:
                noise = load_noise_model(cfg.noise_model)
            else:
                noise = estimate_noise_model(series, l_bar, cfg.seed)
            noise.save(output('noise_model.txt'))
            survey = normality_survey(series, l_bar)
            summary['normality'] = dict((k, v) for k, v in survey.items() if k != 'modes')

        with recorder.stage('transfer'):
            write_transfer_csv(output('transfer.csv'), energy_transfer(basis, w_stationary, l_bar))
            write_transfer_csv(output('transfer_time_averaged.csv'),
                               time_averaged_transfer(basis, [dns.states[i] for i in tail], l_bar))

        with recorder.stage('closure_runs'):
            results = _closure_runs(cfg, basis, w_stationary, l_bar, noise)
            logs = []
            for name, trajectory, error in results:
                write_spectrum_csv(output('%s_spectrum.csv' % name), trajectory.spectra)
                write_invariants_csv(output('%s_invariants.csv' % name), trajectory.times, trajectory.invariants)
                record = {'final_time': trajectory.times[-1], 'blew_up': error is not None}
                if error is None:
                    write_snapshot(output('%s_final.ezsn' % name), trajectory.final_state,
                                   parse_closure(name), trajectory.steps[-1], trajectory.times[-1], cfg.seed)
                else:
                    write_snapshot(output('%s_last_good.ezsn' % name), error.state, parse_closure(name),
                                   error.step - 1, error.time - cfg.h, cfg.seed)
                    record['blow_up_time'] = error.time
                    run_blew_up.send(sender=run, closure=name, time=error.time, step=error.step)
                    if recorder.log_level >= 1:
                        logs.append(Log(run=run, stage='closure_%s' % name, status=STAGE_STATUS.failed,
                                        message=str(error), exception_type=type(error).__name__))
                summary['runs'][name] = record
            if logs:
                Log.objects.bulk_create(logs)
            # a run that blew up is compared on the last spectrum it recorded
            finals = dict((name, trajectory.spectra.final) for name, trajectory, error in results)

        with recorder.stage('compare'):
            rows = []
            if 'dns' in finals:
                for name, spectrum in finals.items():
                    if name == 'dns':
                        continue
                    distance = spectrum_distance(finals['dns'], spectrum, l_bar)
                    rows.append((name, l_bar, distance))
                    summary['runs'][name]['distance'] = distance
                    summary['runs'][name]['compared_at'] = summary['runs'][name]['final_time']
                if 'epn' in finals:
                    summary['runs']['epn']['pile_up_ratio'] = pile_up_ratio(finals['dns'], finals['epn'], l_bar)
            write_distance_csv(output('distances.csv'), rows)

        run.status = STATUS.finished
    except PipelineError as e:
        run.status = STATUS.failed
        summary['failed_stage'] = e.stage
        summary['error'] = str(e)
        raise
    finally:
        summary['stages'] = recorder.completed
        summary['files'] = sorted(files)
        write_json(output('summary.json'), summary)
        write_manifest(out_dir, files)
        run.summary = summary
        run.save()
        logger.info('Pipeline finished with status %s', STATUS._fields[run.status])
    return run


def _closure_runs(cfg, basis, w_stationary, l_bar, noise):
    stepper = StepperConfig(h=cfg.h, t_end=cfg.t_end, reproject_every=cfg.reproject_every,
                            snapshot_every=cfg.snapshot_every)
    jobs = []
    for closure in cfg.closures:
        kind = parse_closure(closure)
        model = get_closure(kind, basis, l_bar)
        start = w_stationary if kind == CLOSURE.dns else project_large(basis, w_stationary, l_bar)
        jobs.append((closure_name(kind), model, start, stepper, noise if model.stochastic else None,
                     cfg.casimir_order))

    pool = ThreadPool(min(cfg.threads, len(jobs)))
    results = pool.map(_run_closure, jobs)
    pool.close()
    pool.join()
    for name, trajectory, error in results:
        logger.info('Closure %s reached t=%s%s', name, trajectory.times[-1], ' (blew up)' if error else '')
    return results

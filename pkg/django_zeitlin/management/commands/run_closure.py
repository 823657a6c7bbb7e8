from django.core.exceptions import ValidationError

from django_zeitlin.closures import get_closure
from django_zeitlin.errors import BlowUp
from django_zeitlin.integrators import StepperConfig, integrate
from django_zeitlin.management.commands._base import ZeitlinCommand
from django_zeitlin.noise import load_noise_model
from django_zeitlin.reports import write_invariants_csv, write_spectrum_csv
from django_zeitlin.snapshots import read_snapshot, write_snapshot
from django_zeitlin.spectral import build_basis
from django_zeitlin.models import SimulationRun
from django_zeitlin.signals import run_blew_up
from django_zeitlin.utils import STATUS, closure_name, parse_closure


class Command(ZeitlinCommand):
    help = 'Integrate one closure from a snapshot.'

    def add_command_arguments(self, parser):
        parser.add_argument('--closure', required=True, help='dns, deterministic, salt or epn')
        parser.add_argument('--initial', required=True, help='Initial snapshot')
        parser.add_argument('--l-bar', dest='l_bar', type=int)
        parser.add_argument('--noise-model', dest='noise_model', help='Noise model for salt and epn')
        parser.add_argument('--t-end', dest='t_end', type=float)

    def run(self, **options):
        snapshot = read_snapshot(options['initial'])
        n = snapshot.state.shape[0]
        cfg = self.load_run_config(options, n=n, closure=options['closure'], l_bar=options.get('l_bar'),
                                   noise_model=options.get('noise_model'), t_end=options.get('t_end'))
        kind = parse_closure(cfg.closure)
        name = closure_name(kind)
        basis = build_basis(n)
        if name == 'dns':
            closure = get_closure(kind, basis)
        elif cfg.l_bar == 'auto':
            raise ValidationError('Reduced closures need an explicit --l-bar')
        else:
            closure = get_closure(kind, basis, cfg.l_bar)
        noise = None
        if closure.stochastic:
            if not cfg.noise_model:
                raise ValidationError('Closure %s needs --noise-model' % name)
            noise = load_noise_model(cfg.noise_model)

        stepper = StepperConfig(h=cfg.h, t_end=cfg.t_end, reproject_every=cfg.reproject_every,
                                snapshot_every=cfg.snapshot_every)
        run = SimulationRun.objects.create(
            name=cfg.name, closure=kind, n=n, l_bar=None if name == 'dns' else cfg.l_bar, seed=cfg.seed,
            h=cfg.h, t_end=cfg.t_end, out_dir=cfg.out_dir, config=cfg.as_dict(), status=STATUS.running)
        try:
            trajectory = integrate(snapshot.state, closure, stepper, noise=noise, keep_states=False,
                                   casimir_order=cfg.casimir_order, start_step=snapshot.step,
                                   start_time=snapshot.time)
        except BlowUp as e:
            write_snapshot(self.output_path(cfg, '%s_last_good.ezsn' % name), e.state, kind, e.step - 1,
                           e.time - cfg.h, cfg.seed)
            if e.trajectory is not None:
                write_spectrum_csv(self.output_path(cfg, '%s_spectrum.csv' % name), e.trajectory.spectra)
            run.status = STATUS.blew_up
            run.summary = {'blow_up_time': e.time, 'step': e.step}
            run.save()
            run_blew_up.send(sender=run, closure=name, time=e.time, step=e.step)
            raise
        write_spectrum_csv(self.output_path(cfg, '%s_spectrum.csv' % name), trajectory.spectra)
        write_invariants_csv(self.output_path(cfg, '%s_invariants.csv' % name), trajectory.times,
                             trajectory.invariants)
        path = self.output_path(cfg, '%s_final.ezsn' % name)
        write_snapshot(path, trajectory.final_state, kind, trajectory.steps[-1], trajectory.times[-1], cfg.seed)
        run.status = STATUS.finished
        run.summary = {'final_time': trajectory.times[-1], 'snapshot': path}
        run.save()
        return path

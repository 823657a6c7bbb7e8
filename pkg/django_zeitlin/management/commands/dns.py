import os

from django_zeitlin.closures import get_closure
from django_zeitlin.initial import gen_ic
from django_zeitlin.integrators import StepperConfig, integrate
from django_zeitlin.management.commands._base import ZeitlinCommand, logger
from django_zeitlin.reports import write_invariants_csv, write_spectrum_csv
from django_zeitlin.snapshots import read_snapshot, write_snapshot
from django_zeitlin.spectral import build_basis
from django_zeitlin.utils import CLOSURE


class Command(ZeitlinCommand):
    help = 'Integrate the resolved model and write snapshots, spectra and invariants.'

    def add_command_arguments(self, parser):
        parser.add_argument('-n', type=int, help='Matrix size, when no initial snapshot is given')
        parser.add_argument('--initial', help='Initial snapshot; a random field is generated otherwise')
        parser.add_argument('--t-end', dest='t_end', type=float, help='Integration time')

    def run(self, **options):
        start_step, start_time = 0, 0.0
        if options.get('initial'):
            snapshot = read_snapshot(options['initial'])
            cfg = self.load_run_config(options, n=snapshot.state.shape[0], t_end=options.get('t_end'))
            w0, start_step, start_time = snapshot.state, snapshot.step, snapshot.time
            basis = build_basis(cfg.n)
        else:
            cfg = self.load_run_config(options, n=options.get('n'), t_end=options.get('t_end'))
            basis = build_basis(cfg.n)
            w0 = gen_ic(cfg.n, cfg.seed, cfg.initial, basis=basis)

        directory = self.output_path(cfg, 'dns_snapshots')
        os.makedirs(directory, exist_ok=True)

        def save(step, time, state):
            write_snapshot(os.path.join(directory, 'snap_%08d.ezsn' % step), state, CLOSURE.dns, step, time, cfg.seed)

        save(start_step, start_time, w0)
        stepper = StepperConfig(h=cfg.h, t_end=cfg.t_end, reproject_every=cfg.reproject_every,
                                snapshot_every=cfg.snapshot_every)
        trajectory = integrate(w0, get_closure(CLOSURE.dns, basis), stepper, keep_states=False,
                               casimir_order=cfg.casimir_order, start_step=start_step, start_time=start_time,
                               on_snapshot=save)
        write_spectrum_csv(self.output_path(cfg, 'dns_spectrum.csv'), trajectory.spectra)
        write_invariants_csv(self.output_path(cfg, 'dns_invariants.csv'), trajectory.times, trajectory.invariants)
        logger.info('Resolved run reached t=%s', trajectory.times[-1])
        return directory

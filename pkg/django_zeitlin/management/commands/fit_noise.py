import glob
import os

from django.core.exceptions import ValidationError

from django_zeitlin.management.commands._base import ZeitlinCommand
from django_zeitlin.noise import coefficient_series, estimate_noise_model
from django_zeitlin.normality import normality_survey
from django_zeitlin.snapshots import read_snapshot
from django_zeitlin.spectral import build_basis


class Command(ZeitlinCommand):
    help = 'Fit per-mode Brownian noise above l_bar from a directory of resolved snapshots.'

    def add_command_arguments(self, parser):
        parser.add_argument('--snapshots', required=True, help='Directory with snap_*.ezsn files')
        parser.add_argument('--l-bar', dest='l_bar', type=int, required=True)
        parser.add_argument('--fraction', type=float, help='Use only the final fraction of the snapshots')
        parser.add_argument('-o', '--output', default='noise_model.txt')

    def run(self, **options):
        paths = sorted(glob.glob(os.path.join(options['snapshots'], 'snap_*.ezsn')))
        if not paths:
            raise ValidationError('No snapshots found in %s' % options['snapshots'])
        snapshots = [read_snapshot(path) for path in paths]
        fraction = options.get('fraction') or 1.0
        snapshots = snapshots[int(len(snapshots) * (1 - fraction)):]
        n = snapshots[0].state.shape[0]
        cfg = self.load_run_config(options, n=n, l_bar=options['l_bar'])

        basis = build_basis(n)
        series = coefficient_series(basis, [s.state for s in snapshots], [s.time for s in snapshots], cfg.l_bar)
        model = estimate_noise_model(series, cfg.l_bar, cfg.seed)
        path = self.output_path(cfg, options['output'])
        model.save(path)
        survey = normality_survey(series, cfg.l_bar)
        self.stderr.write('KS pass fraction %.3f, AD pass fraction %.3f over %d modes' % (
            survey['ks_pass_fraction'], survey['ad_pass_fraction'], survey['tested']))
        return path

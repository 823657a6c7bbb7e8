from django_zeitlin.harmonics import gauss_grid, sph_evaluate
from django_zeitlin.management.commands._base import ZeitlinCommand
from django_zeitlin.reports import write_grid_csv
from django_zeitlin.snapshots import read_snapshot
from django_zeitlin.spectral import analyze, build_basis


class Command(ZeitlinCommand):
    help = 'Evaluate the continuous field of a snapshot on a Gauss-Legendre grid.'

    def add_command_arguments(self, parser):
        parser.add_argument('--snapshot', required=True)
        parser.add_argument('--n-theta', dest='n_theta', type=int)
        parser.add_argument('--n-phi', dest='n_phi', type=int)
        parser.add_argument('--l-max', dest='l_max', type=int)
        parser.add_argument('-o', '--output', default='grid.csv')

    def run(self, **options):
        snapshot = read_snapshot(options['snapshot'])
        n = snapshot.state.shape[0]
        cfg = self.load_run_config(options, n=n)
        l_max = options.get('l_max') or n - 1
        n_theta = options.get('n_theta') or l_max + 1
        n_phi = options.get('n_phi') or 2 * l_max + 1
        c = analyze(build_basis(n), snapshot.state, l_max)
        theta, phi, _ = gauss_grid(n_theta, n_phi)
        path = self.output_path(cfg, options['output'])
        write_grid_csv(path, theta, phi, sph_evaluate(c, n_theta, n_phi))
        return path

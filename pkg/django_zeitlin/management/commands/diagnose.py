from django_zeitlin.diagnostics import SpectrumSeries, energy_spectrum, energy_transfer, invariants
from django_zeitlin.management.commands._base import ZeitlinCommand
from django_zeitlin.reports import write_invariants_csv, write_spectrum_csv, write_transfer_csv
from django_zeitlin.snapshots import read_snapshot
from django_zeitlin.spectral import build_basis


class Command(ZeitlinCommand):
    help = 'Write the spectrum, invariants and energy transfer of one snapshot.'

    def add_command_arguments(self, parser):
        parser.add_argument('--snapshot', required=True)
        parser.add_argument('--l-bar', dest='l_bar', type=int, required=True)

    def run(self, **options):
        snapshot = read_snapshot(options['snapshot'])
        n = snapshot.state.shape[0]
        cfg = self.load_run_config(options, n=n, l_bar=options['l_bar'])
        basis = build_basis(n)
        state = snapshot.state

        series = SpectrumSeries()
        series.append(snapshot.time, energy_spectrum(basis, state))
        write_spectrum_csv(self.output_path(cfg, 'spectrum.csv'), series)
        write_invariants_csv(self.output_path(cfg, 'invariants.csv'), [snapshot.time],
                             [invariants(basis, state, min(cfg.casimir_order, n))])
        path = self.output_path(cfg, 'transfer.csv')
        write_transfer_csv(path, energy_transfer(basis, state, cfg.l_bar))
        return path

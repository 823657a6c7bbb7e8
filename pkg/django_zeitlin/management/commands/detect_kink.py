from django.core.exceptions import ValidationError

from django_zeitlin.diagnostics import detect_kink, energy_spectrum
from django_zeitlin.management.commands._base import ZeitlinCommand, logger
from django_zeitlin.reports import read_spectrum_csv
from django_zeitlin.snapshots import read_snapshot
from django_zeitlin.spectral import build_basis


class Command(ZeitlinCommand):
    help = 'Print the spectral breakpoint l_bar of a spectrum CSV (time-averaged) or snapshot.'

    def add_command_arguments(self, parser):
        parser.add_argument('--spectrum', help='Spectrum CSV as written by dns')
        parser.add_argument('--snapshot', help='Snapshot to take the spectrum from')
        parser.add_argument('--range', nargs=2, type=int, metavar=('LO', 'HI'), help='Search range')
        parser.add_argument('--since', type=float, help='Only average spectra recorded from this time on')

    def run(self, **options):
        if bool(options.get('spectrum')) == bool(options.get('snapshot')):
            raise ValidationError('Give exactly one of --spectrum and --snapshot')
        if options.get('spectrum'):
            spectrum = read_spectrum_csv(options['spectrum']).mean(start=options.get('since'))
        else:
            state = read_snapshot(options['snapshot']).state
            spectrum = energy_spectrum(build_basis(state.shape[0]), state)
        result = detect_kink(spectrum, search_range=options.get('range'))
        if not result.has_kink:
            logger.warning('No clear kink: two segments do not beat a single power law')
        return str(result.l_bar)

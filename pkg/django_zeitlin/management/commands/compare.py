import os

from django.core.exceptions import ValidationError

from django_zeitlin.diagnostics import spectrum_distance
from django_zeitlin.management.commands._base import ZeitlinCommand
from django_zeitlin.reports import read_spectrum_csv, write_distance_csv


class Command(ZeitlinCommand):
    help = 'Log-spectrum RMS distance between a reference run and candidate runs at their final time.'

    def add_command_arguments(self, parser):
        parser.add_argument('--reference', required=True, help='Reference spectrum CSV')
        parser.add_argument('--candidate', nargs='+', default=[], help='Candidate spectrum CSVs')
        parser.add_argument('--l-max', dest='l_max', type=int, required=True)
        parser.add_argument('-o', '--output', default='distances.csv')

    def run(self, **options):
        if not options['candidate']:
            raise ValidationError('Name at least one --candidate spectrum')
        reference = read_spectrum_csv(options['reference']).final
        rows = []
        for path in options['candidate']:
            distance = spectrum_distance(reference, read_spectrum_csv(path).final, options['l_max'])
            rows.append((os.path.splitext(os.path.basename(path))[0], options['l_max'], distance))
        out_dir = options.get('out_dir') or '.'
        os.makedirs(out_dir, exist_ok=True)
        write_distance_csv(os.path.join(out_dir, options['output']), rows)
        return '\n'.join('%s %r' % (name, distance) for name, _, distance in rows)

from django_zeitlin.initial import gen_ic
from django_zeitlin.management.commands._base import ZeitlinCommand
from django_zeitlin.snapshots import write_snapshot
from django_zeitlin.utils import CLOSURE


class Command(ZeitlinCommand):
    help = 'Generate a random initial vorticity and write it as a snapshot.'

    def add_command_arguments(self, parser):
        parser.add_argument('-n', type=int, help='Matrix size')
        parser.add_argument('--l0', type=float, help='Width of the blob profile')
        parser.add_argument('-o', '--output', default='initial.ezsn', help='Snapshot file name')

    def run(self, **options):
        cfg = self.load_run_config(options, n=options.get('n'))
        profile = dict(cfg.initial)
        if options.get('l0'):
            profile.update(profile='blob', l0=options['l0'])
        w0 = gen_ic(cfg.n, cfg.seed, profile)
        path = self.output_path(cfg, options['output'])
        write_snapshot(path, w0, CLOSURE.dns, 0, 0.0, cfg.seed)
        return path

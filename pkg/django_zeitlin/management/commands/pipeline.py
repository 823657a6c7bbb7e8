from django_zeitlin.management.commands._base import ZeitlinCommand
from django_zeitlin.pipeline import run_pipeline


class Command(ZeitlinCommand):
    help = 'Run the full reduction experiment described by --config.'

    def add_command_arguments(self, parser):
        parser.add_argument('-n', type=int, help='Overrides the configured matrix size')
        parser.add_argument('-l', '--log-level', dest='log_level', type=int,
                            help='"0" to record nothing, "1" to only record failures')

    def run(self, **options):
        cfg = self.load_run_config(options, n=options.get('n'))
        run = run_pipeline(cfg, log_level=options.get('log_level'))
        return run.out_dir

import os

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from django_zeitlin.config import load_config
from django_zeitlin.errors import BlowUp, FileFormatError, PipelineError
from django_zeitlin.logutils import setup_loghandlers

logger = setup_loghandlers("INFO")

EXIT_CONFIG = 2
EXIT_BLOWUP = 3
EXIT_IO = 4


def returncode_for(exception):
    if isinstance(exception, PipelineError) and exception.__cause__ is not None:
        return returncode_for(exception.__cause__)
    if isinstance(exception, BlowUp):
        return EXIT_BLOWUP
    if isinstance(exception, (OSError, FileFormatError)):
        return EXIT_IO
    # anything else is an input the library rejected
    return EXIT_CONFIG


class ZeitlinCommand(BaseCommand):
    """
    Adds --config, --seed, --out-dir and --quiet to every command and turns
    library errors into CommandError with a meaningful exit code.
    """

    def add_arguments(self, parser):
        parser.add_argument('--config', help='JSON run configuration')
        parser.add_argument('--seed', type=int, help='Overrides the configured seed')
        parser.add_argument('--out-dir', dest='out_dir', help='Directory for all outputs')
        parser.add_argument('--quiet', action='store_true', help='Only log warnings and errors')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def load_run_config(self, options, **overrides):
        overrides.setdefault('seed', options.get('seed'))
        overrides.setdefault('out_dir', options.get('out_dir'))
        if options.get('config') and not os.path.exists(options['config']):
            raise ValidationError('Configuration file %s does not exist' % options['config'])
        return load_config(options.get('config'), **overrides)

    def output_path(self, cfg, name):
        os.makedirs(cfg.out_dir, exist_ok=True)
        return os.path.join(cfg.out_dir, name)

    def handle(self, *args, **options):
        if options.get('quiet'):
            logger.setLevel('WARNING')
        try:
            return self.run(**options)
        except (ValidationError, BlowUp, PipelineError, OSError, ValueError) as e:
            message = '; '.join(e.messages) if isinstance(e, ValidationError) else str(e)
            logger.error(message)
            raise CommandError(message, returncode=returncode_for(e))

    def run(self, **options):
        raise NotImplementedError

"""
Per-run configuration, read from a JSON document and merged over the
DJANGO_ZEITLIN defaults.
"""
import json

from django.core.exceptions import ValidationError

from . import settings
from .validators import (validate_cadence, validate_closures, validate_initial, validate_l_bar,
                         validate_positive, validate_size)


class RunConfig(object):
    FIELDS = ('n', 'seed', 'h', 't_end', 'closure', 'closures', 'l_bar', 'snapshot_every',
              'reproject_every', 'out_dir', 'initial', 'noise_model', 'kink_range', 'burn_in',
              'fit_fraction', 'threads', 'casimir_order', 'name')

    def __init__(self, **kwargs):
        unknown = set(kwargs) - set(self.FIELDS)
        if unknown:
            raise ValidationError('Unknown configuration keys: %s' % ', '.join(sorted(unknown)))
        self.n = kwargs.get('n')
        self.seed = kwargs.get('seed', 0)
        self.h = kwargs.get('h', settings.get_default_step())
        self.t_end = kwargs.get('t_end', settings.get_default_t_end())
        self.closure = kwargs.get('closure', 'dns')
        self.closures = kwargs.get('closures', ['dns', 'deterministic', 'salt', 'epn'])
        self.l_bar = kwargs.get('l_bar', 'auto')
        self.snapshot_every = kwargs.get('snapshot_every', settings.get_snapshot_every())
        self.reproject_every = kwargs.get('reproject_every', settings.get_reproject_every())
        self.out_dir = kwargs.get('out_dir', settings.get_output_dir())
        self.initial = kwargs.get('initial') or {'profile': 'blob'}
        self.noise_model = kwargs.get('noise_model')
        self.kink_range = kwargs.get('kink_range')
        self.burn_in = dict(kwargs.get('burn_in') or {})
        self.fit_fraction = kwargs.get('fit_fraction', settings.get_fit_fraction())
        self.threads = kwargs.get('threads', settings.get_threads())
        self.casimir_order = kwargs.get('casimir_order', settings.get_casimir_order())
        self.name = kwargs.get('name', 'run')
        self.burn_in.setdefault('window', settings.get_stationarity_window())
        self.burn_in.setdefault('tol', settings.get_stationarity_tol())
        self.burn_in.setdefault('max_time', settings.get_burn_in_max())
        self.burn_in.setdefault('chunk', self.burn_in['window'])
        self.clean()

    def clean(self):
        if self.n is None:
            raise ValidationError('Configuration must set n')
        validate_size(self.n)
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ValidationError('Seed must be an integer, got %s' % self.seed)
        validate_positive(self.h)
        if not isinstance(self.t_end, (int, float)) or self.t_end < 0:
            raise ValidationError('t_end must be a non-negative number, got %s' % self.t_end)
        validate_closures([self.closure])
        validate_closures(self.closures)
        validate_l_bar(self.l_bar, self.n)
        validate_cadence(self.snapshot_every)
        validate_cadence(self.reproject_every)
        validate_cadence(self.threads)
        if 'snapshot' not in self.initial:
            validate_initial(self.initial, self.n)
        if self.kink_range is not None:
            if (not isinstance(self.kink_range, (list, tuple)) or len(self.kink_range) != 2
                    or not 2 <= self.kink_range[0] < self.kink_range[1] <= self.n - 2):
                raise ValidationError('kink_range must be [lo, hi] within [2, %d]' % (self.n - 2))
        if not 0 < self.fit_fraction <= 1:
            raise ValidationError('fit_fraction must be in (0, 1], got %s' % self.fit_fraction)
        if not 2 <= self.casimir_order <= self.n:
            raise ValidationError('casimir_order must be in [2, %d]' % self.n)
        for key in ('window', 'max_time', 'chunk', 'tol'):
            validate_positive(self.burn_in[key])

    def as_dict(self):
        return dict((field, getattr(self, field)) for field in self.FIELDS)

    def copy(self, **overrides):
        values = self.as_dict()
        values.update(overrides)
        return RunConfig(**values)


def load_config(path=None, **overrides):
    """
    Reads the JSON document at ``path`` (if any) and applies ``overrides``
    whose value is not None.
    """
    values = {}
    if path:
        try:
            with open(path) as handle:
                values = json.load(handle)
        except ValueError as e:
            raise ValidationError('%s is not valid JSON: %s' % (path, e))
        if not isinstance(values, dict):
            raise ValidationError('%s must hold a JSON object' % path)
    values.update((k, v) for k, v in overrides.items() if v is not None)
    return RunConfig(**values)

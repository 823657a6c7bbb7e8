from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from .utils import CLOSURE, parse_closure

PROFILES = ('blob', 'table')


def validate_size(value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 2:
        raise ValidationError(_('Matrix size must be an integer of at least 2, got %(value)s'),
                              params={'value': value}, code='invalid')


def validate_positive(value):
    if not isinstance(value, (int, float)) or isinstance(value, bool) or not value > 0:
        raise ValidationError(_('Expected a positive number, got %(value)s'),
                              params={'value': value}, code='invalid')


def validate_cadence(value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValidationError(_('Cadence must be a positive integer, got %(value)s'),
                              params={'value': value}, code='invalid')


def validate_l_bar(value, n):
    """
    Accepts an integer in [1, n - 1] or 'auto', which defers the choice to
    the spectrum-kink detection.
    """
    if value == 'auto':
        return
    if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= n - 1:
        raise ValidationError(_('l_bar must be "auto" or an integer in [1, %(top)s], got %(value)s'),
                              params={'top': n - 1, 'value': value}, code='invalid')


def validate_closures(value):
    if not isinstance(value, (list, tuple)) or not value:
        raise ValidationError(_('Closures must be a non-empty list'), code='invalid')
    for closure in value:
        try:
            parse_closure(closure)
        except ValueError:
            raise ValidationError(_('Unknown closure %(value)s, must be one of: %(names)s'),
                                  params={'value': closure, 'names': ', '.join(CLOSURE._fields)},
                                  code='invalid')


def validate_initial(value, n):
    if not isinstance(value, dict):
        raise ValidationError(_('Initial condition must be an object'), code='invalid')
    profile = value.get('profile', 'blob')
    if profile not in PROFILES:
        raise ValidationError(_('Unknown initial profile %(value)s'), params={'value': profile}, code='invalid')
    if profile == 'table':
        amplitudes = value.get('amplitudes')
        if not isinstance(amplitudes, list) or len(amplitudes) != n - 1:
            raise ValidationError(_('A table profile needs %(count)s amplitudes'),
                                  params={'count': n - 1}, code='invalid')
        if any(not isinstance(a, (int, float)) or a < 0 for a in amplitudes):
            raise ValidationError(_('Amplitudes must be non-negative numbers'), code='invalid')
    elif value.get('l0') is not None:
        validate_positive(value['l0'])

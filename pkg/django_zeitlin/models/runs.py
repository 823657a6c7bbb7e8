from django.db import models
from django.utils.translation import gettext_lazy as _
from jsonfield import JSONField

from django_zeitlin.utils import CLOSURE, STATUS

__all__ = ['SimulationRun']


class SimulationRun(models.Model):
    """
    One pipeline run or one run_closure invocation, with its resolved
    configuration and the summary written at the end.
    """
    CLOSURE_CHOICES = [(value, _(name)) for name, value in zip(CLOSURE._fields, CLOSURE)]
    STATUS_CHOICES = [(value, _(name.replace('_', ' '))) for name, value in zip(STATUS._fields, STATUS)]

    name = models.CharField(_('Name'), max_length=100)
    closure = models.PositiveSmallIntegerField(_('Closure'), choices=CLOSURE_CHOICES, default=CLOSURE.dns)
    n = models.PositiveIntegerField(_('Matrix size'))
    l_bar = models.PositiveIntegerField(_('Cutoff degree'), null=True, blank=True)
    seed = models.BigIntegerField(_('Seed'), default=0)
    h = models.FloatField(_('Step size'), null=True, blank=True)
    t_end = models.FloatField(_('End time'), null=True, blank=True)
    status = models.PositiveSmallIntegerField(_('Status'), choices=STATUS_CHOICES, default=STATUS.running,
                                              db_index=True)
    out_dir = models.CharField(_('Output directory'), max_length=500, blank=True)
    config = JSONField(_('Configuration'), blank=True, default=dict)
    summary = JSONField(_('Summary'), blank=True, default=dict)
    created = models.DateTimeField(auto_now_add=True, db_index=True)
    last_updated = models.DateTimeField(auto_now=True)

    class Meta:
        app_label = 'django_zeitlin'
        verbose_name = _('Simulation run')
        verbose_name_plural = _('Simulation runs')
        ordering = ['-created']

    def __str__(self):
        return '%s (N=%d)' % (self.name, self.n)

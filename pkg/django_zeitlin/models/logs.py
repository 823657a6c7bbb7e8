from django.db import models
from django.utils.translation import gettext_lazy as _

from django_zeitlin.models.runs import SimulationRun
from django_zeitlin.utils import STAGE_STATUS

__all__ = ['Log']


class Log(models.Model):
    """
    A model to record the outcome of each pipeline stage.
    """

    STATUS_CHOICES = [(STAGE_STATUS.completed, _("completed")), (STAGE_STATUS.failed, _("failed"))]

    run = models.ForeignKey(SimulationRun, editable=False, related_name='logs',
                            verbose_name=_('Run'), on_delete=models.CASCADE)
    date = models.DateTimeField(auto_now_add=True)
    stage = models.CharField(_('Stage'), max_length=50)
    status = models.PositiveSmallIntegerField(_('Status'), choices=STATUS_CHOICES)
    exception_type = models.CharField(_('Exception type'), max_length=255, blank=True)
    message = models.TextField(_('Message'), blank=True)

    class Meta:
        app_label = 'django_zeitlin'
        verbose_name = _("Log")
        verbose_name_plural = _("Logs")

    def __str__(self):
        return '%s: %s' % (self.stage, self.get_status_display())

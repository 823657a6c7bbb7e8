# -*- coding: utf-8
from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class DjangoZeitlinConfig(AppConfig):
    name = 'django_zeitlin'
    verbose_name = _('Euler-Zeitlin model reduction')
    default_auto_field = 'django.db.models.AutoField'

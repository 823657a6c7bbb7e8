from django.contrib import admin
from django.utils.translation import gettext_lazy as _

from django_zeitlin.models import Log, SimulationRun
from django_zeitlin.utils import STATUS


def mark_failed(modeladmin, request, queryset):
    queryset.filter(status=STATUS.running).update(status=STATUS.failed)


mark_failed.short_description = _('Mark stale running runs as failed')


class LogInline(admin.TabularInline):
    model = Log
    can_delete = False
    fields = ('date', 'stage', 'status', 'exception_type', 'message')
    readonly_fields = fields

    def get_queryset(self, request):
        return super().get_queryset(request).order_by('date')

    def has_add_permission(self, request, obj=None):
        return False

    def has_change_permission(self, request, obj=None):
        return False


class SimulationRunAdmin(admin.ModelAdmin):
    inlines = (LogInline,)
    list_display = ['id', 'name', 'closure', 'n', 'l_bar', 'seed', 'status', 'created']
    list_filter = ['status', 'closure']
    readonly_fields = ['config', 'summary', 'out_dir', 'created', 'last_updated']
    actions = [mark_failed]


class LogAdmin(admin.ModelAdmin):
    list_display = ('date', 'run', 'stage', 'status', 'exception_type')
    list_filter = ('status', 'stage')


admin.site.register(SimulationRun, SimulationRunAdmin)
admin.site.register(Log, LogAdmin)

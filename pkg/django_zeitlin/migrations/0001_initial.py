from django.db import migrations, models
import django.db.models.deletion
import jsonfield.fields


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SimulationRun',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('name', models.CharField(max_length=100, verbose_name='Name')),
                ('closure', models.PositiveSmallIntegerField(choices=[(0, 'dns'), (1, 'deterministic'), (2, 'salt'), (3, 'epn')], default=0, verbose_name='Closure')),
                ('n', models.PositiveIntegerField(verbose_name='Matrix size')),
                ('l_bar', models.PositiveIntegerField(blank=True, null=True, verbose_name='Cutoff degree')),
                ('seed', models.BigIntegerField(default=0, verbose_name='Seed')),
                ('h', models.FloatField(blank=True, null=True, verbose_name='Step size')),
                ('t_end', models.FloatField(blank=True, null=True, verbose_name='End time')),
                ('status', models.PositiveSmallIntegerField(choices=[(0, 'running'), (1, 'finished'), (2, 'failed'), (3, 'blew up')], db_index=True, default=0, verbose_name='Status')),
                ('out_dir', models.CharField(blank=True, max_length=500, verbose_name='Output directory')),
                ('config', jsonfield.fields.JSONField(blank=True, default=dict, verbose_name='Configuration')),
                ('summary', jsonfield.fields.JSONField(blank=True, default=dict, verbose_name='Summary')),
                ('created', models.DateTimeField(auto_now_add=True, db_index=True)),
                ('last_updated', models.DateTimeField(auto_now=True)),
            ],
            options={
                'verbose_name': 'Simulation run',
                'verbose_name_plural': 'Simulation runs',
                'ordering': ['-created'],
            },
        ),
        migrations.CreateModel(
            name='Log',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('date', models.DateTimeField(auto_now_add=True)),
                ('stage', models.CharField(max_length=50, verbose_name='Stage')),
                ('status', models.PositiveSmallIntegerField(choices=[(0, 'completed'), (1, 'failed')], verbose_name='Status')),
                ('exception_type', models.CharField(blank=True, max_length=255, verbose_name='Exception type')),
                ('message', models.TextField(blank=True, verbose_name='Message')),
                ('run', models.ForeignKey(editable=False, on_delete=django.db.models.deletion.CASCADE, related_name='logs', to='django_zeitlin.SimulationRun', verbose_name='Run')),
            ],
            options={
                'verbose_name': 'Log',
                'verbose_name_plural': 'Logs',
            },
        ),
    ]

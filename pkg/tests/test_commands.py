import glob
import json
import os
import shutil
import tempfile
from io import StringIO

import mock
import numpy as np
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase

from django_zeitlin.errors import BlowUp
from django_zeitlin.models import SimulationRun
from django_zeitlin.noise import load_noise_model
from django_zeitlin.reports import read_spectrum_csv
from django_zeitlin.snapshots import read_snapshot
from django_zeitlin.utils import CLOSURE, STATUS

from .utils import power_law


class CommandTest(TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def call(self, name, **options):
        out = StringIO()
        call_command(name, stdout=out, stderr=StringIO(), quiet=True, **options)
        return out.getvalue().strip()

    def path(self, *parts):
        return os.path.join(self.tmp, *parts)

    def test_gen_ic(self):
        path = self.call('gen_ic', n=8, seed=3, out_dir=self.tmp)
        self.assertEqual(path, self.path('initial.ezsn'))
        snapshot = read_snapshot(path)
        self.assertEqual(snapshot.state.shape, (8, 8))
        self.assertEqual(snapshot.seed, 3)
        again = read_snapshot(self.call('gen_ic', n=8, seed=3, out_dir=self.tmp, output='again.ezsn'))
        self.assertTrue(np.array_equal(snapshot.state, again.state))

    def test_missing_config(self):
        with self.assertRaises(CommandError) as raised:
            self.call('gen_ic', config=self.path('nope.json'))
        self.assertEqual(raised.exception.returncode, 2)

    def test_invalid_config(self):
        with open(self.path('config.json'), 'w') as handle:
            json.dump({'n': 1}, handle)
        with self.assertRaises(CommandError) as raised:
            self.call('gen_ic', config=self.path('config.json'))
        self.assertEqual(raised.exception.returncode, 2)

    def test_unreadable_snapshot(self):
        with open(self.path('broken.ezsn'), 'wb') as handle:
            handle.write(b'nothing useful')
        with self.assertRaises(CommandError) as raised:
            self.call('diagnose', snapshot=self.path('broken.ezsn'), l_bar=2, out_dir=self.tmp)
        self.assertEqual(raised.exception.returncode, 4)

    def test_rejected_inputs_are_config_errors(self):
        with open(self.path('spectrum.csv'), 'w') as handle:
            handle.write('t,l,E\n')
            for l, energy in enumerate(power_law(32, -3.0, 8, -1.0), 1):
                handle.write('0.0,%d,%r\n' % (l, energy))
        with self.assertRaises(CommandError) as raised:
            self.call('detect_kink', spectrum=self.path('spectrum.csv'), range=[1, 8])
        self.assertEqual(raised.exception.returncode, 2)

    def test_malformed_noise_model_is_an_io_error(self):
        self.call('gen_ic', n=8, seed=2, out_dir=self.tmp)
        with open(self.path('noise.txt'), 'w') as handle:
            handle.write('not a noise model\n')
        with self.assertRaises(CommandError) as raised:
            self.call('run_closure', closure='salt', initial=self.path('initial.ezsn'), l_bar=3,
                      noise_model=self.path('noise.txt'), out_dir=self.tmp)
        self.assertEqual(raised.exception.returncode, 4)
        self.assertFalse(SimulationRun.objects.exists())

    def test_detect_kink(self):
        with open(self.path('spectrum.csv'), 'w') as handle:
            handle.write('t,l,E\n')
            for l, energy in enumerate(power_law(64, -3.0, 12, -1.0), 1):
                handle.write('0.0,%d,%r\n' % (l, energy))
        self.assertEqual(self.call('detect_kink', spectrum=self.path('spectrum.csv')), '12')

    def test_resolved_to_reduced_workflow(self):
        self.call('gen_ic', n=8, seed=2, out_dir=self.tmp)
        directory = self.call('dns', initial=self.path('initial.ezsn'), t_end=40.0, out_dir=self.tmp)
        snapshots = sorted(glob.glob(os.path.join(directory, 'snap_*.ezsn')))
        self.assertEqual(len(snapshots), 41)
        self.assertEqual(read_snapshot(snapshots[-1]).step, 160)
        self.assertEqual(len(read_spectrum_csv(self.path('dns_spectrum.csv'))), 41)

        model_path = self.call('fit_noise', snapshots=directory, l_bar=3, out_dir=self.tmp)
        model = load_noise_model(model_path)
        self.assertEqual((model.n, model.l_bar), (8, 3))

        final = self.call('run_closure', closure='salt', initial=snapshots[-1], l_bar=3,
                          noise_model=model_path, t_end=2.0, out_dir=self.tmp)
        snapshot = read_snapshot(final)
        self.assertEqual(snapshot.time, 42.0)
        self.assertTrue(os.path.exists(self.path('salt_spectrum.csv')))
        run = SimulationRun.objects.get()
        self.assertEqual((run.closure, run.l_bar, run.status), (CLOSURE.salt, 3, STATUS.finished))
        self.assertEqual(run.summary['final_time'], 42.0)

        transfer = self.call('diagnose', snapshot=final, l_bar=3, out_dir=self.tmp)
        self.assertTrue(os.path.exists(transfer))

        output = self.call('compare', reference=self.path('dns_spectrum.csv'),
                           candidate=[self.path('salt_spectrum.csv')], l_max=3, out_dir=self.tmp)
        self.assertTrue(output.startswith('salt_spectrum '))

    def test_reduced_closure_needs_inputs(self):
        self.call('gen_ic', n=8, seed=2, out_dir=self.tmp)
        with self.assertRaises(CommandError) as raised:
            self.call('run_closure', closure='salt', initial=self.path('initial.ezsn'), l_bar=3, out_dir=self.tmp)
        self.assertEqual(raised.exception.returncode, 2)
        with self.assertRaises(CommandError) as raised:
            self.call('run_closure', closure='deterministic', initial=self.path('initial.ezsn'), out_dir=self.tmp)
        self.assertEqual(raised.exception.returncode, 2)

    def test_blow_up_exit_code(self):
        self.call('gen_ic', n=8, seed=2, out_dir=self.tmp)
        state = read_snapshot(self.path('initial.ezsn')).state
        error = BlowUp('boom', 1.25, 5, state)
        with mock.patch('django_zeitlin.management.commands.run_closure.integrate', side_effect=error):
            with self.assertRaises(CommandError) as raised:
                self.call('run_closure', closure='deterministic', initial=self.path('initial.ezsn'), l_bar=3,
                          out_dir=self.tmp)
        self.assertEqual(raised.exception.returncode, 3)
        last_good = read_snapshot(self.path('deterministic_last_good.ezsn'))
        self.assertEqual(last_good.step, 4)
        self.assertTrue(np.array_equal(last_good.state, state))
        run = SimulationRun.objects.get()
        self.assertEqual(run.status, STATUS.blew_up)
        self.assertEqual(run.summary, {'blow_up_time': 1.25, 'step': 5})

    def test_export_grid(self):
        self.call('gen_ic', n=6, seed=1, out_dir=self.tmp)
        path = self.call('export_grid', snapshot=self.path('initial.ezsn'), n_theta=6, n_phi=11, out_dir=self.tmp)
        with open(path) as handle:
            lines = handle.read().splitlines()
        self.assertEqual(lines[0], 'theta,phi,value')
        self.assertEqual(len(lines), 1 + 6 * 11)

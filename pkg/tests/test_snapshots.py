import hashlib
import json
import os
import shutil
import struct
import tempfile

import numpy as np
from django.test import SimpleTestCase

from django_zeitlin.diagnostics import SpectrumSeries, energy_transfer
from django_zeitlin.errors import SnapshotFormatError
from django_zeitlin.reports import (read_spectrum_csv, write_distance_csv, write_manifest, write_spectrum_csv,
                                    write_transfer_csv)
from django_zeitlin.snapshots import HEADER, VERSION, dumps, loads, read_snapshot, write_snapshot
from django_zeitlin.spectral import build_basis
from django_zeitlin.utils import CLOSURE

from .utils import random_vorticity


class SnapshotTest(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_header_layout(self):
        self.assertEqual(HEADER.size, 37)
        data = dumps(np.zeros((3, 3)), CLOSURE.salt, 12, 3.0, 99)
        self.assertEqual(data[:4], b'EZSN')
        self.assertEqual(len(data), 37 + 9 * 16)

    def test_file_round_trip(self):
        w = random_vorticity(6, seed=1)
        path = os.path.join(self.tmp, 'state.ezsn')
        write_snapshot(path, w, CLOSURE.epn, 40, 10.0, 5)
        snapshot = read_snapshot(path)
        self.assertTrue(np.array_equal(snapshot.state, w))
        self.assertEqual((snapshot.closure, snapshot.step, snapshot.time, snapshot.seed), (CLOSURE.epn, 40, 10.0, 5))

    def test_corrupt_files(self):
        data = dumps(np.eye(2), CLOSURE.dns, 0, 0.0, 1)
        self.assertRaises(SnapshotFormatError, loads, b'XXXX' + data[4:])
        self.assertRaises(SnapshotFormatError, loads, data[:-1])
        self.assertRaises(SnapshotFormatError, loads, data[:10])
        self.assertRaises(SnapshotFormatError, dumps, np.zeros((2, 3)), CLOSURE.dns, 0, 0.0, 1)

    def test_unknown_version(self):
        data = dumps(np.eye(2), CLOSURE.dns, 0, 0.0, 1)
        self.assertEqual(loads(data).step, 0)
        newer = data[:4] + struct.pack('<I', VERSION + 1) + data[8:]
        with self.assertRaisesRegex(SnapshotFormatError, 'version %d' % (VERSION + 1)):
            loads(newer)


class ReportTest(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_spectrum_csv(self):
        series = SpectrumSeries()
        series.append(0.0, [1.0, 0.5, 0.25])
        series.append(1.5, [2.0, 1.0, 1 / 3.0])
        path = os.path.join(self.tmp, 'spectrum.csv')
        write_spectrum_csv(path, series)
        loaded = read_spectrum_csv(path)
        self.assertEqual(loaded.times, [0.0, 1.5])
        self.assertTrue(np.array_equal(loaded.final, series.final))
        with open(path) as handle:
            self.assertEqual(handle.readline().strip(), 't,l,E')

    def test_transfer_and_distance_csv(self):
        basis = build_basis(6)
        path = os.path.join(self.tmp, 'transfer.csv')
        write_transfer_csv(path, energy_transfer(basis, random_vorticity(6, seed=2), 2))
        with open(path) as handle:
            lines = handle.read().splitlines()
        self.assertEqual(lines[0], 'l,coupling,value')
        self.assertEqual(len(lines), 1 + 2 * 5 * 5)

        path = os.path.join(self.tmp, 'distances.csv')
        write_distance_csv(path, [('salt', 4, 0.25)])
        with open(path) as handle:
            self.assertEqual(handle.read(), 'run,l_max,distance\nsalt,4,0.25\n')

    def test_manifest(self):
        with open(os.path.join(self.tmp, 'a.txt'), 'wb') as handle:
            handle.write(b'zeitlin')
        path = write_manifest(self.tmp, ['a.txt', 'missing.txt'])
        with open(path) as handle:
            manifest = json.load(handle)
        self.assertEqual(list(manifest['files']), ['a.txt'])
        self.assertEqual(manifest['files']['a.txt']['sha256'], hashlib.sha256(b'zeitlin').hexdigest())
        self.assertEqual(manifest['files']['a.txt']['bytes'], 7)

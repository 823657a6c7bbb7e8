"""CSV and JSON writers for run outputs."""
import csv
import hashlib
import json
import os

import numpy as np

from .diagnostics import SpectrumSeries


def _number(value):
    return repr(float(value))


def _writer(path):
    handle = open(path, 'w', newline='')
    return handle, csv.writer(handle, lineterminator='\n')


def write_spectrum_csv(path, series):
    handle, writer = _writer(path)
    with handle:
        writer.writerow(['t', 'l', 'E'])
        for time, spectrum in zip(series.times, series.values):
            for l, energy in enumerate(spectrum, 1):
                writer.writerow([_number(time), l, _number(energy)])


def read_spectrum_csv(path):
    rows = {}
    with open(path, newline='') as handle:
        for row in csv.DictReader(handle):
            rows.setdefault(float(row['t']), {})[int(row['l'])] = float(row['E'])
    series = SpectrumSeries()
    for time in sorted(rows):
        spectrum = rows[time]
        series.append(time, [spectrum[l] for l in sorted(spectrum)])
    return series


def write_invariants_csv(path, times, records):
    handle, writer = _writer(path)
    with handle:
        writer.writerow(['t', 'name', 'value'])
        for time, record in zip(times, records):
            writer.writerow([_number(time), 'energy', _number(record.energy)])
            writer.writerow([_number(time), 'enstrophy', _number(record.enstrophy)])
            for order, value in record.casimirs.items():
                writer.writerow([_number(time), 'casimir_%d_re' % order, _number(value.real)])
                writer.writerow([_number(time), 'casimir_%d_im' % order, _number(value.imag)])
            for m, value in zip((-1, 0, 1), record.angular_momentum):
                writer.writerow([_number(time), 'angular_momentum_%d' % m, _number(value)])


def write_transfer_csv(path, report):
    handle, writer = _writer(path)
    with handle:
        writer.writerow(['l', 'coupling', 'value'])
        for l, name, value in report.rows():
            writer.writerow([l, name, _number(value)])


def write_distance_csv(path, rows):
    handle, writer = _writer(path)
    with handle:
        writer.writerow(['run', 'l_max', 'distance'])
        for name, l_max, distance in rows:
            writer.writerow([name, l_max, _number(distance)])


def write_grid_csv(path, theta, phi, values):
    handle, writer = _writer(path)
    with handle:
        writer.writerow(['theta', 'phi', 'value'])
        for i, th in enumerate(theta):
            for j, ph in enumerate(phi):
                writer.writerow([_number(th), _number(ph), _number(values[i, j])])


class _Encoder(json.JSONEncoder):
    def default(self, o):
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, np.generic):
            return o.item()
        return super(_Encoder, self).default(o)


def write_json(path, data):
    with open(path, 'w') as handle:
        json.dump(data, handle, cls=_Encoder, indent=2, sort_keys=True)
        handle.write('\n')


def file_digest(path):
    digest = hashlib.sha256()
    with open(path, 'rb') as handle:
        for block in iter(lambda: handle.read(1 << 16), b''):
            digest.update(block)
    return digest.hexdigest()


def write_manifest(out_dir, names):
    """Writes manifest.json mapping each output file to its size and sha256."""
    entries = {}
    for name in sorted(set(names)):
        path = os.path.join(out_dir, name)
        if os.path.exists(path):
            entries[name] = {'bytes': os.path.getsize(path), 'sha256': file_digest(path)}
    path = os.path.join(out_dir, 'manifest.json')
    write_json(path, {'files': entries})
    return path

import numpy as np
from django.test import SimpleTestCase

from django_zeitlin.diagnostics import (COUPLINGS, SpectrumSeries, detect_kink, energy_spectrum, energy_transfer,
                                        invariants, pile_up_ratio, spectrum_distance, spectrum_slope,
                                        stationarity, time_averaged_transfer, time_to_stationarity)
from django_zeitlin.errors import DegenerateInput, InsufficientData, InvalidSize
from django_zeitlin.spectral import basis_element, build_basis, inner, solve_poisson

from .utils import power_law, random_vorticity


class SpectrumTest(SimpleTestCase):

    def setUp(self):
        self.basis = build_basis(9)

    def test_single_mode(self):
        spectrum = energy_spectrum(self.basis, 2.0 * basis_element(self.basis, 3, -1))
        expected = np.zeros(8)
        expected[2] = 4.0 / 24
        self.assertTrue(np.allclose(spectrum, expected, atol=1e-14))

    def test_energy_matches_stream_function(self):
        w = random_vorticity(9, seed=8)
        energy = -0.5 * inner(solve_poisson(self.basis, w), w)
        self.assertAlmostEqual(energy_spectrum(self.basis, w).sum(), energy, places=12)
        self.assertGreater(energy, 0)

    def test_invariants(self):
        w = random_vorticity(9, seed=9)
        record = invariants(self.basis, w, casimir_order=5)
        self.assertEqual(list(record.casimirs), [2, 3, 4, 5])
        self.assertAlmostEqual(record.enstrophy, np.linalg.norm(w) ** 2, places=10)
        self.assertAlmostEqual(record.casimirs[3].real, 0.0, places=10)
        self.assertRaises(ValueError, invariants, self.basis, w, 10)
        self.assertRaises(ValueError, invariants, self.basis, w, 1)

    def test_angular_momentum(self):
        record = invariants(self.basis, basis_element(self.basis, 1, 0))
        self.assertTrue(np.allclose(record.angular_momentum, [0.0, 1.0, 0.0], atol=1e-13))


class TransferTest(SimpleTestCase):

    def setUp(self):
        self.basis = build_basis(10)
        self.w = random_vorticity(10, seed=12)

    def test_couplings_add_up(self):
        report = energy_transfer(self.basis, self.w, 4)
        self.assertEqual(list(report.couplings), list(COUPLINGS))
        combined = sum(report.couplings.values())
        self.assertTrue(np.allclose(combined, report.total, atol=1e-12))
        self.assertAlmostEqual(report.total.sum(), 0.0, places=11)
        self.assertTrue(np.array_equal(report.total_flux, np.abs(report.total)))
        self.assertEqual(report.kind, 'instantaneous')

    def test_rows(self):
        rows = list(energy_transfer(self.basis, self.w, 4).rows())
        self.assertEqual(len(rows), 2 * 5 * 9)
        self.assertIn('F:total', set(name for _, name, _ in rows))

    def test_time_average(self):
        states = [self.w, random_vorticity(10, seed=13)]
        report = time_averaged_transfer(self.basis, states, 4)
        first, second = [energy_transfer(self.basis, w, 4) for w in states]
        self.assertEqual(report.kind, 'time-averaged')
        self.assertTrue(np.allclose(report.total, (first.total + second.total) / 2))
        self.assertTrue(np.allclose(report.total_flux, (first.total_flux + second.total_flux) / 2))
        self.assertRaises(InsufficientData, time_averaged_transfer, self.basis, [], 4)


class KinkTest(SimpleTestCase):

    def test_broken_power_law(self):
        result = detect_kink(power_law(64, -3.0, 12, -1.0))
        self.assertEqual(result.l_bar, 12)
        self.assertTrue(result.has_kink)
        self.assertLess(result.residual, 1e-20)

    def test_custom_range(self):
        self.assertEqual(detect_kink(power_law(64, -3.0, 20, -1.0), search_range=(10, 40)).l_bar, 20)

    def test_pure_power_law(self):
        self.assertFalse(detect_kink(power_law(64, -2.0)).has_kink)

    def test_invalid_input(self):
        self.assertRaises(InvalidSize, detect_kink, power_law(16, -3.0), (1, 8))
        self.assertRaises(InvalidSize, detect_kink, power_law(16, -3.0), (4, 15))
        self.assertRaises(InsufficientData, detect_kink, power_law(16, -3.0), (4, 7))
        spectrum = power_law(16, -3.0)
        spectrum[5] = 0.0
        self.assertRaises(DegenerateInput, detect_kink, spectrum)


def series_from(spectra, times):
    series = SpectrumSeries()
    for time, spectrum in zip(times, spectra):
        series.append(time, spectrum)
    return series


class StationarityTest(SimpleTestCase):

    def setUp(self):
        self.base = power_law(16, -3.0)
        self.times = np.arange(51.0)

    def test_constant_spectrum(self):
        series = series_from([self.base] * 51, self.times)
        self.assertTrue(stationarity(series, 25.0))
        self.assertEqual(time_to_stationarity(series, 20.0), 40.0)

    def test_doubling_is_not_stationary(self):
        spectra = [self.base if t <= 25 else 2 * self.base for t in self.times]
        self.assertFalse(stationarity(series_from(spectra, self.times), 25.0))

    def test_short_series(self):
        series = series_from([self.base] * 10, np.arange(10.0))
        self.assertRaises(InsufficientData, stationarity, series, 25.0)
        self.assertIsNone(time_to_stationarity(series, 25.0))


class ComparisonTest(SimpleTestCase):

    def test_distance(self):
        e = power_law(16, -2.0)
        self.assertEqual(spectrum_distance(e, e, 10), 0.0)
        self.assertAlmostEqual(spectrum_distance(e, np.e * e, 10), 1.0, places=12)
        zeroed = e.copy()
        zeroed[3] = 0.0
        self.assertRaises(DegenerateInput, spectrum_distance, e, zeroed, 10)
        self.assertRaises(InvalidSize, spectrum_distance, e, e, 20)

    def test_slope(self):
        self.assertAlmostEqual(spectrum_slope(power_law(32, -1.0), 8, 16), -1.0, places=10)

    def test_pile_up(self):
        e = power_law(16, -2.0)
        self.assertAlmostEqual(pile_up_ratio(e, 3 * e, 8), 3.0, places=12)

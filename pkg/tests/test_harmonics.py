import numpy as np
from django.test import SimpleTestCase

from django_zeitlin.errors import InvalidSize, QuadratureError
from django_zeitlin.harmonics import (QUANTIZATION_SCALE, bracket_consistency, gauss_grid, harmonic,
                                      operator_norm, poisson_bracket_grid, sph_analyze, sph_evaluate)
from django_zeitlin.spectral import CoeffField, mode_count

KAPPA = np.sqrt(3 / (4 * np.pi))


class GridTest(SimpleTestCase):

    def test_gauss_grid(self):
        theta, phi, weights = gauss_grid(6, 8)
        self.assertTrue(np.all(np.diff(theta) > 0))
        self.assertAlmostEqual(weights.sum(), 2.0, places=12)
        self.assertEqual(phi[0], 0.0)
        self.assertAlmostEqual(phi[1], np.pi / 4)

    def test_degree_one_harmonics(self):
        theta, phi, _ = gauss_grid(3, 5)
        th, ph = np.meshgrid(theta, phi, indexing='ij')
        self.assertTrue(np.allclose(sph_evaluate(harmonic(1, 0), 3, 5), KAPPA * np.cos(th), atol=1e-14))
        self.assertTrue(np.allclose(sph_evaluate(harmonic(1, 1), 3, 5), KAPPA * np.sin(th) * np.cos(ph),
                                    atol=1e-14))
        self.assertTrue(np.allclose(sph_evaluate(harmonic(1, -1), 3, 5), KAPPA * np.sin(th) * np.sin(ph),
                                    atol=1e-14))

    def test_analysis_inverts_evaluation(self):
        l_max = 6
        c = CoeffField(None, l_max, np.random.default_rng(4).standard_normal(mode_count(l_max)))
        grid = sph_evaluate(c, l_max + 1, 2 * l_max + 1)
        self.assertTrue(np.allclose(sph_analyze(grid, l_max).values, c.values, atol=1e-12))

    def test_under_resolved(self):
        self.assertRaises(QuadratureError, sph_analyze, np.zeros((3, 9)), 4)
        self.assertRaises(QuadratureError, sph_analyze, np.zeros((5, 8)), 4)


class BracketTest(SimpleTestCase):

    def test_continuous_bracket_of_coordinates(self):
        # {z, x} = y
        grid = poisson_bracket_grid(harmonic(1, 0), harmonic(1, 1), 4, 4)
        bracket = sph_analyze(grid, 1)
        self.assertAlmostEqual(bracket[1, -1], KAPPA, places=12)
        self.assertAlmostEqual(bracket[1, 0], 0.0, places=12)
        self.assertAlmostEqual(bracket[1, 1], 0.0, places=12)

    def test_equal_arguments_vanish(self):
        psi = harmonic(2, 1)
        self.assertEqual(bracket_consistency(psi, psi, [8, 16]), [0.0, 0.0])

    def test_degree_one_closed_form(self):
        sizes = [8, 16, 32]
        discrepancies = bracket_consistency(harmonic(1, 0), harmonic(1, 1), sizes)
        for n, value in zip(sizes, discrepancies):
            s = (n - 1) / 2.0
            alpha = np.sqrt(n * (n * n - 1) / 12.0)
            expected = QUANTIZATION_SCALE * KAPPA * (1 / np.sqrt(1 - 1.0 / n ** 2) - 1) * s / alpha
            self.assertAlmostEqual(value / expected, 1.0, places=5)
        self.assertTrue(discrepancies[0] > discrepancies[1] > discrepancies[2])

    def test_higher_degrees_converge(self):
        discrepancies = bracket_consistency(harmonic(2, 1), harmonic(3, -2), [16, 32, 64, 128])
        self.assertTrue(all(np.isfinite(discrepancies)))
        for coarse, fine in zip(discrepancies, discrepancies[1:]):
            self.assertLess(fine, coarse)

    def test_mixed_degrees_in_either_order(self):
        low, high = harmonic(1, 0), harmonic(3, 2)
        grid = poisson_bracket_grid(low, high, 8, 12)
        self.assertEqual(grid.shape, (8, 12))
        forward = bracket_consistency(low, high, [16])
        backward = bracket_consistency(high, low, [16])
        self.assertAlmostEqual(forward[0], backward[0], places=10)

    def test_degree_must_fit(self):
        self.assertRaises(InvalidSize, bracket_consistency, harmonic(4, 0), harmonic(1, 0), [4, 8])
        self.assertRaises(QuadratureError, bracket_consistency, harmonic(2, 0), harmonic(2, 1), [8], n_theta=2)
        self.assertRaises(ValueError, bracket_consistency, harmonic(1, 0), harmonic(1, 1), [])

    def test_operator_norm(self):
        a = np.diag([3.0, -5.0, 1.0])
        self.assertAlmostEqual(operator_norm(a), 5.0, places=6)
        self.assertEqual(operator_norm(np.zeros((3, 3))), 0.0)

import numpy as np
from django.test import SimpleTestCase

from django_zeitlin.closures import (DeterministicReduced, EnergyPreservingReduced, FullDNS, SaltReduced,
                                     get_closure)
from django_zeitlin.dynamics import (build_noise_aggregates, commutator, dns_vector_field, epn_diffusion,
                                     reduced_drift, salt_diffusion)
from django_zeitlin.errors import DegenerateInput, InvalidSize
from django_zeitlin.spectral import (CoeffField, analyze, basis_element, build_basis, inner, is_vorticity,
                                     mode_count, project_large, solve_poisson)

from .utils import random_vorticity


class VectorFieldTest(SimpleTestCase):

    def setUp(self):
        self.n = 10
        self.basis = build_basis(self.n)
        self.w = random_vorticity(self.n, seed=11)

    def test_commutator_shapes(self):
        self.assertRaises(InvalidSize, commutator, np.zeros((2, 2)), np.zeros((3, 3)))

    def test_dns_conserves_energy_and_enstrophy(self):
        rate = dns_vector_field(self.basis, self.w)
        p = solve_poisson(self.basis, self.w)
        self.assertTrue(is_vorticity(rate))
        scale = np.linalg.norm(rate)
        self.assertLess(abs(inner(p, rate)), 1e-12 * scale * np.linalg.norm(p))
        self.assertLess(abs(inner(self.w, rate)), 1e-12 * scale * np.linalg.norm(self.w))

    def test_dns_is_tangent_to_casimirs(self):
        rate = dns_vector_field(self.basis, self.w)
        scale = np.linalg.norm(self.w)
        for order in (2, 3, 4):
            power = np.linalg.matrix_power(self.w, order - 1)
            derivative = order * np.trace(power @ rate).real
            bound = 1e-12 * order * scale ** (order - 1) * np.linalg.norm(rate)
            self.assertLess(abs(derivative), bound, order)

    def test_full_cutoff_matches_dns(self):
        self.assertTrue(np.array_equal(reduced_drift(self.basis, self.w, self.n - 1),
                                       dns_vector_field(self.basis, self.w)))

    def test_reduced_drift(self):
        l_bar = 4
        w_bar = project_large(self.basis, self.w, l_bar)
        rate = reduced_drift(self.basis, w_bar, l_bar, check=True)
        self.assertTrue(np.allclose(project_large(self.basis, rate, l_bar), rate, atol=1e-12))
        p_bar = solve_poisson(self.basis, w_bar)
        self.assertLess(abs(inner(p_bar, rate)), 1e-12 * np.linalg.norm(rate) * np.linalg.norm(p_bar))

    def test_reduced_drift_checks_subspace(self):
        self.assertRaises(DegenerateInput, reduced_drift, self.basis, self.w, 3, True)


class NoiseAggregateTest(SimpleTestCase):

    def setUp(self):
        self.n = 7
        self.l_bar = 3
        self.basis = build_basis(self.n)
        values = np.random.default_rng(2).standard_normal(mode_count(self.n - 1))
        values[:mode_count(self.l_bar)] = 0.0
        self.increments = CoeffField(self.n, self.n - 1, values)
        self.w_bar = project_large(self.basis, random_vorticity(self.n, seed=3), self.l_bar)

    def test_inverse_laplacian_relation(self):
        aggregate = build_noise_aggregates(self.basis, self.increments, self.l_bar)
        q = analyze(self.basis, aggregate.q, self.n - 1)
        r = analyze(self.basis, aggregate.r, self.n - 1)
        degrees = q.degrees()
        self.assertTrue(np.allclose(q.values, r.values / (-degrees * (degrees + 1.0)), atol=1e-13))
        self.assertTrue(np.allclose(r.values, self.increments.values, atol=1e-12))

    def test_large_modes_are_ignored(self):
        noisy = self.increments.copy()
        noisy[1, 0] = 5.0
        a = build_noise_aggregates(self.basis, noisy, self.l_bar)
        b = build_noise_aggregates(self.basis, self.increments, self.l_bar)
        self.assertTrue(np.array_equal(a.r, b.r))

    def test_mapping_keys_are_checked(self):
        self.assertRaises(InvalidSize, build_noise_aggregates, self.basis, {(2, 0): 1.0}, self.l_bar)
        self.assertRaises(InvalidSize, build_noise_aggregates, self.basis, {(7, 0): 1.0}, self.l_bar)

    def brute_force(self, term):
        total = np.zeros((self.n, self.n), dtype=complex)
        for (l, m), value in self.increments.as_mapping(self.l_bar + 1).items():
            total += value * project_large(self.basis, term(l, basis_element(self.basis, l, m)), self.l_bar)
        return total

    def test_salt_matches_mode_sum(self):
        aggregate = build_noise_aggregates(self.basis, self.increments, self.l_bar)
        expected = self.brute_force(lambda l, t: commutator(t, self.w_bar) / (-l * (l + 1.0)))
        self.assertTrue(np.allclose(salt_diffusion(self.basis, self.w_bar, aggregate, self.l_bar), expected,
                                    atol=1e-12))

    def test_epn_matches_mode_sum(self):
        aggregate = build_noise_aggregates(self.basis, self.increments, self.l_bar)
        p_bar = solve_poisson(self.basis, self.w_bar)
        expected = self.brute_force(lambda l, t: commutator(p_bar, t))
        self.assertTrue(np.allclose(epn_diffusion(self.basis, self.w_bar, aggregate, self.l_bar), expected,
                                    atol=1e-12))

    def test_salt_keeps_enstrophy_and_epn_keeps_energy(self):
        aggregate = build_noise_aggregates(self.basis, self.increments, self.l_bar)
        salt = salt_diffusion(self.basis, self.w_bar, aggregate, self.l_bar)
        self.assertAlmostEqual(inner(self.w_bar, salt), 0.0, places=12)
        epn = epn_diffusion(self.basis, self.w_bar, aggregate, self.l_bar)
        self.assertAlmostEqual(inner(solve_poisson(self.basis, self.w_bar), epn), 0.0, places=12)


class ClosureTest(SimpleTestCase):

    def test_get_closure(self):
        basis = build_basis(8)
        self.assertIsInstance(get_closure('dns', basis), FullDNS)
        self.assertIsInstance(get_closure('deterministic', basis, 3), DeterministicReduced)
        self.assertIsInstance(get_closure('salt', basis, 3), SaltReduced)
        self.assertIsInstance(get_closure(3, basis, 3), EnergyPreservingReduced)
        self.assertEqual(get_closure('dns', basis, 3).l_bar, 7)
        self.assertTrue(get_closure('epn', basis, 3).stochastic)
        self.assertFalse(get_closure('deterministic', basis, 3).stochastic)
        self.assertRaises(ValueError, get_closure, 'les', basis, 3)
        self.assertRaises(InvalidSize, get_closure, 'salt', basis, 8)

import math

import numpy as np
import pytest

from renyirates import (
    NonnegMatrix,
    bsc_hmm,
    characteristic_polynomial,
    collision_system,
    empirical_growth_probe,
    growth_rate,
    spectral_radius_irreducible,
    strongly_connected_components,
    validate_chain,
)
from renyirates.errors import DimensionOverflow, NoConvergence
from renyirates.random_models import random_nonneg_matrix, random_nonneg_vector

from conftest import RESTRICTED_EXAMPLE

A_EXAMPLE = NonnegMatrix.from_dense(RESTRICTED_EXAMPLE)
NU_EXAMPLE = np.full(5, 1.0 / 9.0)


class TestSpectralRadius:
    def test_mixing_pair(self):
        assert spectral_radius_irreducible(
            np.array([[0.16, 0.36], [0.36, 0.16]])
        ) == pytest.approx(0.52, abs=1e-12)

    def test_singleton(self):
        assert spectral_radius_irreducible(np.array([[0.81]])) == 0.81

    def test_periodic_permutation(self):
        # period-2 component; the +I shift still converges
        assert spectral_radius_irreducible(
            np.array([[0.0, 1.0], [1.0, 0.0]])
        ) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("seed", range(10))
    def test_matches_dense_eigensolver(self, seed):
        rng = np.random.default_rng(seed)
        m = int(rng.integers(2, 6))
        a = rng.random((m, m)) + 0.05  # positive, hence irreducible
        rho = spectral_radius_irreducible(a)
        assert rho == pytest.approx(max(abs(np.linalg.eigvals(a))), abs=1e-10)

    def test_perron_bounds(self):
        rng = np.random.default_rng(11)
        a = rng.random((4, 4)) + 0.01
        rho = spectral_radius_irreducible(a)
        rs = a.sum(axis=1)
        assert rs.min() - 1e-12 <= rho <= rs.max() + 1e-12

    def test_no_convergence_budget(self):
        with pytest.raises(NoConvergence):
            spectral_radius_irreducible(np.ones((3, 3)), max_iter=0)


class TestGrowthRate:
    def test_example_dominant_component(self):
        ga = growth_rate(A_EXAMPLE, NU_EXAMPLE)
        assert ga.rho_plus == pytest.approx(0.81, abs=1e-12)
        assert sorted(ga.component_radii) == pytest.approx(
            [0.36, 0.36, 0.52, 0.81], abs=1e-12
        )
        assert ga.decomposition.components[ga.dominant_component] == (0,)

    def test_zero_weight_vector(self):
        ga = growth_rate(A_EXAMPLE, np.zeros(5))
        assert ga.empty
        assert ga.rho_plus == 0.0
        assert ga.reachable == frozenset()

    @pytest.mark.parametrize("seed", range(10))
    def test_matches_empirical_probe(self, seed):
        rng = np.random.default_rng(seed)
        m = int(rng.integers(1, 6))
        a = random_nonneg_matrix(rng, m, zero_prob=0.5)
        u = random_nonneg_vector(rng, m)
        ga = growth_rate(NonnegMatrix.from_dense(a), u)
        if ga.rho_plus > 0.05:
            probe = empirical_growth_probe(NonnegMatrix.from_dense(a), u, 4000)
            assert probe == pytest.approx(ga.rho_plus, abs=1e-2)

    def test_invariant_under_positive_scaling_of_u(self):
        rng = np.random.default_rng(12)
        a = NonnegMatrix.from_dense(random_nonneg_matrix(rng, 5))
        u = random_nonneg_vector(rng, 5)
        ga1 = growth_rate(a, u)
        ga2 = growth_rate(a, 7.5 * u)
        assert ga1.rho_plus == ga2.rho_plus
        assert ga1.reachable == ga2.reachable

    def test_permutation_equivariance(self):
        rng = np.random.default_rng(13)
        a = random_nonneg_matrix(rng, 5, zero_prob=0.4)
        u = random_nonneg_vector(rng, 5)
        perm = rng.permutation(5)
        ap = a[np.ix_(perm, perm)]
        up = u[perm]
        r1 = growth_rate(NonnegMatrix.from_dense(a), u).rho_plus
        r2 = growth_rate(NonnegMatrix.from_dense(ap), up).rho_plus
        assert r1 == pytest.approx(r2, abs=1e-12)


class TestEmpiricalGrowthProbe:
    def test_scalar_case(self):
        a = NonnegMatrix.from_dense([[0.5]])
        assert empirical_growth_probe(a, np.array([1.0]), 100) == pytest.approx(
            0.5, abs=1e-14
        )

    def test_example_converges_to_dominant_radius(self):
        probe = empirical_growth_probe(A_EXAMPLE, NU_EXAMPLE, 5000)
        assert probe == pytest.approx(0.81, abs=0.01)

    def test_nilpotent_chain_dies(self):
        a = NonnegMatrix.from_dense([[0.0, 1.0], [0.0, 0.0]])
        assert empirical_growth_probe(a, np.array([1.0, 0.0]), 2) == 0.0


class TestCharacteristicPolynomial:
    def test_one_by_one(self):
        assert characteristic_polynomial(np.array([[0.81]])) == pytest.approx(
            [1.0, -0.81]
        )

    def test_mixing_pair(self):
        # det(lambda I - A) = lambda^2 - 0.32 lambda - 0.1040, roots 0.52 and -0.2
        coeffs = characteristic_polynomial(np.array([[0.16, 0.36], [0.36, 0.16]]))
        assert coeffs == pytest.approx([1.0, -0.32, -0.104], abs=1e-14)
        roots = sorted(np.roots(coeffs))
        assert roots == pytest.approx([-0.2, 0.52], abs=1e-12)

    def test_bsc_degree_eight(self):
        chain = validate_chain([[0.7, 0.3], [0.4, 0.6]], [0.5, 0.5])
        cs = collision_system(bsc_hmm(chain, 0.1), 2)
        coeffs = characteristic_polynomial(cs.matrix)
        assert len(coeffs) == 9
        ga = growth_rate(cs.matrix, cs.initial)
        assert abs(np.polyval(coeffs, ga.rho_plus)) <= 1e-8

    def test_component_radii_are_roots(self):
        ga = growth_rate(A_EXAMPLE, NU_EXAMPLE)
        coeffs = characteristic_polynomial(A_EXAMPLE)
        for rho in ga.component_radii:
            assert abs(np.polyval(coeffs, rho)) <= 1e-8

    def test_dimension_guard(self):
        with pytest.raises(DimensionOverflow):
            characteristic_polynomial(np.eye(65))

    def test_matches_numpy_poly(self):
        rng = np.random.default_rng(14)
        a = rng.random((5, 5))
        assert characteristic_polynomial(a) == pytest.approx(
            np.poly(a).tolist(), rel=1e-9, abs=1e-12
        )

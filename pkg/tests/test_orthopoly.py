import math
from fractions import Fraction

import numpy as np
import pytest

from oracles import gauss_legendre_integral, hankel_recurrence, monic_poly_roots
from spectra_lab.orthopoly import (
    KernelEval,
    cd_kernel,
    correlation_det,
    gauss_hermite,
    jacobi_matrix,
    polynomial_roots,
    psi,
    psi_block,
    recurrence_coeffs,
    weight_underflows,
)


class TestRecurrence:
    @pytest.mark.parametrize("rate_num,rate_den", [(1, 1), (2, 1), (1, 2)])
    def test_matches_exact_hankel_oracle(self, rate_num, rate_den):
        rate = rate_num / rate_den
        rec = recurrence_coeffs(rate, 8)
        b_oracle, h_scaled = hankel_recurrence(rate_num, rate_den, 8)
        for i in range(1, 9):
            assert b_oracle[i] == Fraction(i * rate_den, 2 * rate_num)
            assert abs(rec.b[i] - float(b_oracle[i])) <= 1e-12 * float(b_oracle[i])
        scale = math.sqrt(math.pi / rate)
        for i in range(9):
            assert abs(rec.h[i] - scale * float(h_scaled[i])) <= 1e-10 * rec.h[i]

    def test_b_values_at_unit_rate(self):
        rec = recurrence_coeffs(1.0, 3)
        assert np.allclose(rec.b[1:], [0.5, 1.0, 1.5], atol=0)

    def test_all_a_zero(self):
        assert np.all(recurrence_coeffs(0.7, 12).a == 0.0)

    def test_h0_is_the_weight_mass(self):
        mass = gauss_legendre_integral(lambda x: math.exp(-x * x), -12, 12, 400)
        rec = recurrence_coeffs(1.0, 0)
        assert abs(rec.h[0] - mass) < 1e-12
        assert abs(rec.h[0] - math.sqrt(math.pi)) < 1e-14

    def test_rejects_bad_rate(self):
        with pytest.raises(ValueError):
            recurrence_coeffs(0.0, 3)


class TestJacobiMatrix:
    def test_degree_one(self):
        t = jacobi_matrix(recurrence_coeffs(1.0, 3), 1)
        assert t.diag.tolist() == [0.0] and len(t.offdiag) == 0

    def test_degree_two_offdiag(self):
        t = jacobi_matrix(recurrence_coeffs(1.0, 3), 2)
        assert abs(t.offdiag[0] - math.sqrt(0.5)) < 1e-15

    def test_dense_form_symmetric(self):
        t = jacobi_matrix(recurrence_coeffs(2.0, 6), 5)
        assert np.array_equal(t.dense(), t.dense().T)

    def test_rejects_degree_zero(self):
        with pytest.raises(ValueError):
            jacobi_matrix(recurrence_coeffs(1.0, 3), 0)


class TestRoots:
    def test_degree_two_closed_form(self):
        roots = polynomial_roots(recurrence_coeffs(1.0, 2), 2)
        assert np.max(np.abs(roots - [-math.sqrt(0.5), math.sqrt(0.5)])) < 1e-12

    @pytest.mark.parametrize("degree", range(2, 13))
    def test_roots_sum_to_zero(self, degree):
        roots = polynomial_roots(recurrence_coeffs(1.0, degree), degree)
        assert abs(np.sum(roots)) < 1e-12

    @pytest.mark.parametrize("degree", range(2, 13))
    def test_matches_bisection_oracle(self, degree):
        rate = 1.0
        got = polynomial_roots(recurrence_coeffs(rate, degree), degree)
        assert np.max(np.abs(got - monic_poly_roots(rate, degree))) < 1e-9


class TestPsi:
    def test_ground_state_at_origin(self):
        assert abs(psi(0, 0.0, 1.0) - (1.0 / math.pi) ** 0.25) < 1e-14

    def test_orthonormality_by_quadrature(self):
        nodes, weights = gauss_hermite(1.0, 64, decayed=True)
        p = np.array([psi_block(6, float(x), 1.0) for x in nodes])
        gram = p.T @ (weights[:, None] * p)
        assert abs(gram[3, 5]) < 1e-10
        assert abs(gram[4, 4] - 1.0) < 1e-10

    def test_underflow_returns_zero(self):
        assert weight_underflows(1e6, 1.0)
        assert psi(3, 1e6, 1.0) == 0.0

    def test_rejects_negative_index(self):
        with pytest.raises(ValueError):
            psi(-1, 0.0, 1.0)


class TestQuadrature:
    def test_polynomial_exactness(self):
        # integral x^4 exp(-x^2) dx = (3/4) sqrt(pi)
        nodes, weights = gauss_hermite(1.0, 6)
        got = float(np.sum(weights * nodes**4))
        assert abs(got - 0.75 * math.sqrt(math.pi)) < 1e-13


class TestKernel:
    def test_symmetry_bitwise(self):
        k = KernelEval(order_r=7, rate_r=1.0)
        assert cd_kernel(k, 0.3, -1.2) == cd_kernel(k, -1.2, 0.3)

    def test_single_term(self):
        k = KernelEval(order_r=1, rate_r=2.0)
        assert cd_kernel(k, 0.4, 0.4) == psi(0, 0.4, 2.0) ** 2

    @pytest.mark.parametrize("r", [1, 5, 20])
    def test_trace_equals_term_count(self, r):
        k = KernelEval(order_r=r, rate_r=1.0)
        nodes, weights = gauss_hermite(1.0, 64, decayed=True)
        trace = float(np.sum(weights * [cd_kernel(k, float(x), float(x)) for x in nodes]))
        assert abs(trace - r) < 1e-8

    def test_reproducing_property(self):
        order, rate = 12, 1.0
        k = KernelEval(order_r=order, rate_r=rate)
        nodes, weights = gauss_hermite(rate, 128, decayed=True)
        kernel_at = {float(y): psi_block(order, float(y), rate) for y in nodes}
        pairs = [(-1.5, 0.3), (0.0, 0.0), (0.7, -0.2), (1.0, 1.0), (-2.0, 2.0),
                 (0.5, 0.1), (-0.3, -0.9), (1.8, 0.4), (0.2, 1.2)]
        for x, z in pairs:
            px, pz = psi_block(order, x, rate), psi_block(order, z, rate)
            lhs = float(
                np.sum(weights * [ (px @ kernel_at[float(y)]) * (kernel_at[float(y)] @ pz) for y in nodes])
            )
            assert abs(lhs - float(px @ pz)) < 1e-8

    def test_level_density_approaches_semicircle(self):
        r = 40
        k = KernelEval(order_r=r, rate_r=float(r))
        grid = np.linspace(-math.sqrt(2), math.sqrt(2), 401)
        dens = np.array([cd_kernel(k, float(x), float(x)) for x in grid]) / r
        rho = np.sqrt(np.maximum(2.0 - grid**2, 0.0)) / math.pi
        l1 = float(np.sum(np.abs(dens - rho)) * (grid[1] - grid[0]))
        assert l1 <= 0.08


class TestCorrelationDet:
    def test_m1_is_level_density(self):
        k = KernelEval(order_r=6, rate_r=1.0)
        assert correlation_det(k, [0.7], 1) == cd_kernel(k, 0.7, 0.7)

    def test_m2_cofactor_identity(self):
        k = KernelEval(order_r=8, rate_r=1.0)
        rg = np.random.default_rng(3)
        for _ in range(200):
            x, y = rg.uniform(-2.5, 2.5, 2)
            det = correlation_det(k, [min(x, y), max(x, y)], 2)
            cof = cd_kernel(k, x, x) * cd_kernel(k, y, y) - cd_kernel(k, x, y) ** 2
            assert abs(det - cof) < 1e-12

    def test_repulsion_at_repeated_points(self):
        k = KernelEval(order_r=9, rate_r=1.0)
        assert abs(correlation_det(k, [0.4, 0.4], 2)) < 1e-12

    def test_positivity_over_random_point_sets(self):
        rg = np.random.default_rng(17)
        for _ in range(10_000):
            order = int(rg.integers(2, 13))
            m = int(rg.integers(1, 5))
            k = KernelEval(order_r=order, rate_r=1.0)
            pts = np.sort(rg.uniform(-3, 3, m))
            assert correlation_det(k, pts, m) >= -1e-10

    def test_size_validation(self):
        k = KernelEval(order_r=4, rate_r=1.0)
        with pytest.raises(ValueError):
            correlation_det(k, [0.0] * 9, 9)
        with pytest.raises(ValueError):
            correlation_det(k, [0.0, 1.0], 3)

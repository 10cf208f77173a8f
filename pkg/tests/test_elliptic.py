import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from elmlab.elliptic import (
    GUARD,
    Modulus,
    agm,
    de_dr,
    dk_dr,
    dm_dr,
    ellint_e,
    ellint_k,
    elliptic_values,
    m_func,
)
from elmlab.errors import DomainError, NonPositiveInput
from oracles import GOLDEN, SQRT1_2, central_difference, quad_e, quad_k

unit = st.floats(min_value=0.0, max_value=1.0)
interior = st.floats(min_value=1e-6, max_value=1.0 - 1e-6)


class TestModulus:
    @given(unit)
    def test_complement_squares_sum_to_one(self, r):
        m = Modulus(r)
        exact = Fraction(m.r) ** 2 + Fraction(m.r_comp) ** 2 - 1
        assert abs(float(exact)) <= 4e-16

    def test_near_one_keeps_digits(self):
        r = 1.0 - 2.0**-40
        assert Modulus(r).r_comp == pytest.approx(math.sqrt(2.0**-39), rel=1e-15)

    def test_complement_swaps(self):
        m = Modulus(0.3)
        c = m.complement()
        assert (c.r, c.r_comp) == (m.r_comp, m.r)
        assert c.complement() == m

    @pytest.mark.parametrize("bad", [-0.1, 1.5, math.nan, math.inf])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(DomainError):
            Modulus(bad)


class TestAgm:
    def test_fixed_points(self):
        assert agm(1.0, 1.0) == 1.0
        assert agm(4.0, 4.0) == 4.0

    def test_gives_k_at_self_complementary_point(self):
        assert math.pi / (2 * agm(1.0, SQRT1_2)) == pytest.approx(quad_k(SQRT1_2), rel=1e-14)

    @given(st.floats(1e-6, 1e6), st.floats(1e-6, 1e6))
    def test_symmetric_and_between(self, a, b):
        g = agm(a, b)
        assert g == agm(b, a)
        assert min(a, b) * (1 - 1e-15) <= g <= max(a, b) * (1 + 1e-15)
        assert math.sqrt(a * b) * (1 - 1e-15) <= g <= 0.5 * (a + b) * (1 + 1e-15)

    @given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3), st.floats(1e-3, 1e3))
    def test_homogeneous(self, a, b, s):
        assert agm(s * a, s * b) == pytest.approx(s * agm(a, b), rel=1e-14)

    @pytest.mark.parametrize("a,b", [(0.0, 1.0), (1.0, -2.0), (math.inf, 1.0), (math.nan, 1.0)])
    def test_rejects_bad_input(self, a, b):
        with pytest.raises(NonPositiveInput):
            agm(a, b)


class TestEllint:
    def test_endpoints(self):
        assert ellint_k(0.0) == math.pi / 2
        assert ellint_e(0.0) == math.pi / 2
        assert ellint_e(1.0) == 1.0

    def test_k_diverges_at_one(self):
        with pytest.raises(DomainError):
            ellint_k(1.0)

    def test_golden_values(self):
        assert ellint_k(SQRT1_2) == pytest.approx(GOLDEN["K"], rel=1e-15)
        assert ellint_e(SQRT1_2) == pytest.approx(GOLDEN["E"], rel=1e-15)

    @pytest.mark.parametrize("r", [0.01, 0.2, 0.5, 0.8, 0.95, 0.99, 0.999])
    def test_quadrature_oracle(self, r):
        assert ellint_k(r) == pytest.approx(quad_k(r), rel=1e-12)
        assert ellint_e(r) == pytest.approx(quad_e(r), rel=1e-12)

    def test_monotone_on_grid(self):
        grid = np.linspace(0.0, 1.0 - 1e-9, 500)
        k = [ellint_k(r) for r in grid]
        e = [ellint_e(r) for r in np.linspace(0.0, 1.0, 500)]
        assert all(np.diff(k) > 0)
        assert all(np.diff(e) < 0)

    @given(st.floats(0.0, 1.0 - 1e-12))
    def test_ranges(self, r):
        k, e = ellint_k(r), ellint_e(r)
        assert k >= math.pi / 2 and math.isfinite(k)
        assert 1.0 < e <= math.pi / 2
        assert e <= k


class TestEllipticValues:
    def test_self_complementary(self):
        v = elliptic_values(SQRT1_2)
        assert v.K == v.K_comp and v.E == v.E_comp

    def test_legendre_at_self_complementary_point(self):
        v = elliptic_values(SQRT1_2)
        assert abs(2 * v.E * v.K - v.K**2 - math.pi / 2) <= 1e-12
        k, e = quad_k(SQRT1_2), quad_e(SQRT1_2)
        assert abs(2 * e * k - k**2 - math.pi / 2) <= 1e-12

    def test_strict_inequalities_interior(self):
        v = elliptic_values(0.3)
        assert v.E < v.K and v.E_comp < v.K_comp

    @given(interior)
    def test_complement_involution_bitwise(self, r):
        m = Modulus(r)
        v = elliptic_values(m)
        assert v.K_comp == ellint_k(m.complement())
        assert v.E_comp == ellint_e(m.complement())
        assert v.K == ellint_k(m)

    @pytest.mark.parametrize("r", [0.0, 1.0, GUARD / 2, 1 - GUARD / 4])
    def test_guard(self, r):
        with pytest.raises(DomainError):
            elliptic_values(r)


class TestModularFunction:
    def test_self_complementary_value(self):
        k = quad_k(SQRT1_2)
        assert m_func(SQRT1_2) == pytest.approx(k * k / math.pi, rel=1e-13)
        assert m_func(SQRT1_2) == pytest.approx(GOLDEN["m"], rel=1e-15)

    def test_limits(self):
        assert m_func(0.999999) < 1e-4
        assert m_func(1e-6) > 10

    def test_decreasing(self):
        grid = np.linspace(1e-6, 1 - 1e-6, 2000)
        assert all(np.diff([m_func(r) for r in grid]) < 0)

    @pytest.mark.parametrize("r", [0.0, 1.0, -0.5])
    def test_domain(self, r):
        with pytest.raises(DomainError):
            m_func(r)


class TestDerivatives:
    def test_golden_values(self):
        assert dk_dr(SQRT1_2) == pytest.approx(GOLDEN["dk_dr"], rel=1e-14)
        assert de_dr(SQRT1_2) == pytest.approx(GOLDEN["de_dr"], rel=1e-14)
        assert dm_dr(SQRT1_2) == pytest.approx(GOLDEN["dm_dr"], rel=1e-14)

    def test_dk_vanishes_at_zero(self):
        assert 0 < dk_dr(1e-4) < 1e-3

    @pytest.mark.parametrize("r", np.linspace(0.05, 0.95, 19).tolist())
    def test_finite_differences(self, r):
        assert dk_dr(r) == pytest.approx(central_difference(ellint_k, r), rel=1e-6)
        assert de_dr(r) == pytest.approx(central_difference(ellint_e, r), rel=1e-6)
        assert dm_dr(r) == pytest.approx(central_difference(m_func, r), rel=1e-6)

    def test_signs(self):
        grid = np.linspace(1e-4, 1 - 1e-4, 1000)
        assert all(dk_dr(r) > 0 for r in grid)
        assert all(de_dr(r) < 0 for r in grid)
        assert all(dm_dr(r) < 0 for r in grid)

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tatami.gensets import subset_sum_count
from tatami.polylab.generating import (
    TheoremViolation,
    balanced_count,
    balanced_sequence,
    cyclotomic,
    d_at_one_predicted,
    d_poly,
    d_poly_from_cyclotomic,
    d_poly_from_s,
    floor_halving_sum,
    nu,
    odd_part,
    p_at_one_predicted,
    p_poly,
    predicted_deg_p,
    r_poly,
    s_poly,
    s_poly_from_cyclotomic,
    vh_coeff,
    vh_degree,
    vh_poly,
    vh_poly_direct,
)
from tatami.polylab.intpoly import IntPoly
from tatami.polylab.published import BALANCED_COUNTS, P_TABLE, P11_EXPANDED, VH_TABLE


def P(*coeffs):
    return IntPoly(coeffs)


class TestSPoly:
    def test_examples(self):
        assert s_poly(0) == P(1)
        assert s_poly(3) == P(1, 1, 1, 2, 1, 1, 1)
        assert list(s_poly(5).coeffs) == [subset_sum_count(5, k) for k in range(16)]

    @pytest.mark.parametrize("n", range(0, 30))
    def test_degree_and_value(self, n):
        assert s_poly(n).degree == n * (n + 1) // 2
        assert s_poly(n)(1) == 2 ** n

    @pytest.mark.parametrize("n", range(1, 41))
    def test_cyclotomic_form(self, n):
        assert s_poly(n) == s_poly_from_cyclotomic(n)


class TestVH:
    def test_examples(self):
        assert vh_poly(4) == P(1, 2, 3, 2)
        assert vh_poly(2) == P(1)
        assert vh_poly(8)[14] == 10
        assert vh_coeff(8, 7) == 24
        assert vh_coeff(6, 4) == 9
        assert all(vh_coeff(n, 0) == 1 for n in range(2, 30))

    @pytest.mark.parametrize("n", sorted(VH_TABLE))
    def test_published_rows(self, n):
        assert vh_poly(n).coeffs == VH_TABLE[n]

    @pytest.mark.parametrize("n", range(2, 45))
    def test_packed_matches_direct(self, n):
        assert vh_poly(n) == vh_poly_direct(n)

    @pytest.mark.parametrize("n", range(2, 41))
    def test_coefficient_formula(self, n):
        vh = vh_poly(n)
        assert [vh_coeff(n, k) for k in range(len(vh) + 2)] == list(vh.coeffs) + [0, 0]

    @pytest.mark.parametrize("n", range(3, 80))
    def test_degree_and_count(self, n):
        vh = vh_poly(n)
        assert vh.degree == vh_degree(n)
        assert vh(1) == n * 2 ** (n - 3)

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            vh_poly(1)


class TestCyclotomic:
    def test_examples(self):
        assert cyclotomic(2) == P(1, 1)
        assert cyclotomic(6) == P(1, -1, 1)
        assert cyclotomic(12) == P(1, 0, -1, 0, 1)
        assert cyclotomic(12)(1) == 1

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 8, 9, 16, 25, 27, 49])
    def test_prime_power_value(self, m):
        p = next(q for q in range(2, m + 1) if m % q == 0)
        assert cyclotomic(m)(1) == p

    @pytest.mark.parametrize("m", [6, 10, 12, 15, 30, 36])
    def test_composite_value(self, m):
        assert cyclotomic(m)(1) == 1

    def test_domain(self):
        with pytest.raises(ValueError):
            cyclotomic(0)


class TestFactorization:
    def test_d_examples(self):
        assert d_poly(6) == P(1, 2, 2, 2, 1)
        assert d_poly(2) == P(1)
        assert d_poly(10)(1) == 128

    def test_p_examples(self):
        assert p_poly(6) == P(1, 0, 1, 2, 2, -2, 2)
        assert p_poly(11)[10] == -8
        assert p_poly(2) == P(1)

    @pytest.mark.parametrize("n", sorted(P_TABLE))
    def test_published_rows(self, n):
        assert p_poly(n).coeffs == P_TABLE[n]

    def test_expanded_p11(self):
        assert p_poly(11).coeffs == P11_EXPANDED

    @pytest.mark.parametrize("n", range(2, 121, 7))
    def test_theorems(self, n):
        assert d_poly_from_s(n) == d_poly_from_cyclotomic(n)
        assert p_poly(n) * d_poly(n) == vh_poly(n)
        assert d_poly(n)(1) == d_at_one_predicted(n)
        assert p_poly(n).degree == predicted_deg_p(n)
        assert p_poly(n)(1) == p_at_one_predicted(n)

    def test_predicted_examples(self):
        assert predicted_deg_p(11) == 31
        assert predicted_deg_p(2) == 0
        assert predicted_deg_p(8) == 14
        assert p_at_one_predicted(11) == 22
        assert p_at_one_predicted(6) == 6
        assert p_at_one_predicted(2) == 1

    def test_mismatched_forms_raise(self, monkeypatch):
        from tatami.polylab import generating

        generating.d_poly.cache_clear()
        monkeypatch.setattr(generating, "d_poly_from_s", lambda n: P(1, 1))
        with pytest.raises(TheoremViolation):
            generating.d_poly(9)
        generating.d_poly.cache_clear()

    def test_helpers(self):
        assert [nu(m) for m in (0, 1, 7, 8)] == [0, 1, 3, 1]
        assert [odd_part(k) for k in (1, 6, 12, 7)] == [1, 3, 3, 7]
        with pytest.raises(ValueError):
            odd_part(0)


class TestFloorHalving:
    def test_examples(self):
        assert floor_halving_sum(5) == 5
        assert floor_halving_sum(0) == 0
        assert floor_halving_sum(Fraction(17, 2)) == 8

    def test_negative(self):
        with pytest.raises(ValueError):
            floor_halving_sum(Fraction(-1, 3))


@settings(max_examples=1000, deadline=None)
@given(st.fractions(min_value=0, max_value=10**6, max_denominator=10**6))
def test_floor_halving_is_floor(x):
    assert floor_halving_sum(x) == x.numerator // x.denominator


class TestRotations:
    def test_examples(self):
        assert r_poly(2) == P(2, 2)
        assert r_poly(8)(1) == 1024
        assert r_poly(9).reciprocal() == r_poly(9)

    @pytest.mark.parametrize("n", range(2, 61))
    def test_self_reciprocal_and_count(self, n):
        r = r_poly(n)
        assert r.is_self_reciprocal()
        assert r.degree == (n * n - n) // 2
        assert r(1) == n * 2 ** (n - 1)


class TestBalanced:
    def test_examples(self):
        assert balanced_count(8) == 10
        assert balanced_count(9) == 20
        assert balanced_count(6) is None

    def test_published_sequence(self):
        assert tuple(balanced_sequence(56)) == BALANCED_COUNTS

"""Tests for exact polynomial arithmetic and the recursion polynomials
P[k, m] / their integer suffix form P0[k, m], including the vanishing
window, the leading-coefficient formulas, and the elementary-symmetric-sum
characterization used to expand shifted falling factorials."""

from fractions import Fraction

import pytest

from srscorr.errors import DomainError
from srscorr.exactnum import falling_factorial
from srscorr.ppoly import (
    Poly,
    elementary_sum_oracle,
    falling_factorial_via_p0,
    p0_eval,
    p_poly,
    weighted_prefix_poly,
)


# ---------------------------------------------------------------------------
# Poly basics


def test_poly_strips_trailing_zeros_and_reports_degree():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0, 0]).coeffs == ()
    assert Poly().degree == -1
    assert Poly([5]).degree == 0
    assert Poly([0, 0, Fraction(1, 3)]).degree == 2
    assert Poly([1, 2]).coefficient(0) == 1
    assert Poly([1, 2]).coefficient(7) == 0


def test_poly_evaluation():
    p = Poly([1, -2, 3])  # 1 - 2x + 3x^2
    assert p(0) == 1
    assert p(2) == 9
    assert p(Fraction(1, 2)) == Fraction(3, 4)
    assert Poly.ZERO(11) == 0
    assert Poly.ONE(11) == 1
    assert Poly.X(11) == 11


def test_poly_arithmetic():
    p = Poly([1, 1])
    q = Poly([0, 0, 2])
    assert p + q == Poly([1, 1, 2])
    assert p - p == Poly.ZERO
    assert -p == Poly([-1, -1])
    assert p * q == Poly([0, 0, 2, 2])
    assert 3 * p == Poly([3, 3])
    assert p * Fraction(1, 2) == Poly([Fraction(1, 2), Fraction(1, 2)])
    assert p**0 == Poly.ONE
    assert p**3 == Poly([1, 3, 3, 1])
    assert 1 - Poly.X == Poly([1, -1])


def test_poly_cancellation_drops_degree():
    # subtraction that kills the top coefficient must renormalize
    assert (Poly([0, 0, 1]) - Poly([5, 0, 1])).degree == 0


def test_poly_compose_and_shift():
    p = Poly([0, 0, 1])  # x^2
    assert p.compose(Poly([1, 1])) == Poly([1, 2, 1])
    q = Poly([2, -1, 4])
    for x in [0, 3, Fraction(-5, 2)]:
        assert q.shifted(7)(x) == q(x + 7)
        assert q.compose(p)(x) == q(p(x))


def test_poly_coeff_strings_round_trip():
    p = Poly([Fraction(1, 3), -2, 0, Fraction(7, 5)])
    assert p.coeff_strings() == ["1/3", "-2", "0", "7/5"]
    assert Poly.from_strings(p.coeff_strings()) == p


def test_poly_is_immutable_and_hashable():
    p = Poly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)
    assert hash(Poly([1, 2])) == hash(p)
    assert len({Poly([1]), Poly([1]), Poly([2])}) == 2


# ---------------------------------------------------------------------------
# weighted prefix sums


def test_weighted_prefix_poly_matches_direct_sums():
    for q in [Poly.ONE, Poly([1, 1]), Poly([0, 2, 0, 1]), Poly([Fraction(1, 2), -3])]:
        s = weighted_prefix_poly(q)
        assert s.degree == q.degree + 2
        assert s(0) == 0
        for j in range(0, 12):
            assert s(j) == sum(t * q(t + 1) for t in range(1, j))
    with pytest.raises(DomainError):
        weighted_prefix_poly("not a poly")


# ---------------------------------------------------------------------------
# recursion polynomials


def test_p_poly_base_and_small_values():
    assert p_poly(4, 0) == Poly.ONE
    assert p_poly(0, 0) == Poly.ONE
    # P[5, 1](j) = sum_{q=j}^{4} q, so at j = 2 it is 2 + 3 + 4 = 9.
    assert p_poly(5, 1)(2) == 9
    assert p_poly(5, 1)(5) == 0


def test_p_poly_degree_is_twice_m():
    for k in range(0, 9):
        for m in range(0, k + 1):
            assert p_poly(k, m).degree == 2 * m


def test_p_poly_vanishing_window():
    # P[k, m](j) = 0 for k - m + 1 <= j <= k, the window that makes the
    # correlation recursion terminate.
    for k in range(0, 11):
        for m in range(0, k + 1):
            for j in range(k - m + 1, k + 1):
                assert p_poly(k, m)(j) == 0, (k, m, j)


def test_p_poly_rejects_negative_indices():
    with pytest.raises(DomainError):
        p_poly(-1, 0)
    with pytest.raises(DomainError):
        p_poly(3, -2)


def test_p_poly_leading_coefficients():
    # j^(2m) carries (-1)^m / (2^m m!), and j^(2m-1) carries
    # (-1)^m m (2m-5) / (3 * 2^m m!).
    fact = 1
    for m in range(1, 9):
        fact *= m
        lead = Fraction((-1) ** m, 2**m * fact)
        sub = Fraction((-1) ** m * m * (2 * m - 5), 3 * 2**m * fact)
        for k in range(m, 10):
            poly = p_poly(k, m)
            assert poly.coefficient(2 * m) == lead, (k, m)
            assert poly.coefficient(2 * m - 1) == sub, (k, m)


def test_p0_eval_values_and_agreement_with_p_poly():
    assert p0_eval(6, 0, 3) == 1
    assert p0_eval(4, 1, 5) == 0
    assert p0_eval(4, 1, 2) == 5
    assert p0_eval(4, 2, 1) == 11
    for k in range(0, 9):
        for m in range(0, k + 1):
            for j in range(0, k + 1):
                assert p_poly(k, m)(j) == p0_eval(k, m, j), (k, m, j)
    with pytest.raises(DomainError):
        p0_eval(3, 1, -1)


# ---------------------------------------------------------------------------
# elementary symmetric sums and falling-factorial expansion


def test_elementary_sum_oracle_values():
    assert elementary_sum_oracle(3, 0, 1) == 1
    assert elementary_sum_oracle(3, 2, 1) == 11
    assert elementary_sum_oracle(2, 3, 1) == 0
    # empty window: only the v = 0 empty product survives
    assert elementary_sum_oracle(0, 0, 1) == 1
    assert elementary_sum_oracle(0, 1, 1) == 0


def test_elementary_sum_oracle_errors():
    with pytest.raises(DomainError):
        elementary_sum_oracle(1, 0, 3)  # window ends before it starts
    with pytest.raises(DomainError):
        elementary_sum_oracle(3, -1, 1)
    with pytest.raises(DomainError):
        elementary_sum_oracle(3, 1, -1)


def test_p0_is_elementary_symmetric_sum_of_window():
    # P0[j, v](k) is the v-th elementary symmetric sum of {k, ..., j-1}:
    # the window has j - k entries, one per factor of (x - k)_(j-k).
    for j in range(0, 9):
        for v in range(0, j + 1):
            for k in range(0, j + 1):
                assert p0_eval(j, v, k) == elementary_sum_oracle(j - 1, v, k), (j, v, k)


def test_falling_factorial_via_p0_values():
    assert falling_factorial_via_p0(3, 3, Fraction(9, 7)) == 1
    assert falling_factorial_via_p0(2, 0, 5) == 20
    assert falling_factorial_via_p0(4, 1, 6) == 60


def test_falling_factorial_expansion_at_rational_points():
    xs = [Fraction(p, q) for p in (-7, -2, 1, 3, 8) for q in (1, 2, 3)]
    for j in range(0, 9):
        for k in range(0, j + 1):
            for x in xs:
                assert falling_factorial_via_p0(j, k, x) == falling_factorial(x - k, j - k)


def test_falling_factorial_via_p0_rejects_bad_indices():
    with pytest.raises(DomainError):
        falling_factorial_via_p0(3, 4, 1)
    with pytest.raises(DomainError):
        falling_factorial_via_p0(3, -1, 1)


def test_p0_suffix_value_same_at_zero_and_one():
    # the q = 0 term of the defining sum carries weight q = 0, so the
    # values at j = 0 and j = 1 always coincide
    for j in range(0, 10):
        for v in range(0, j + 1):
            assert p0_eval(j, v, 0) == p0_eval(j, v, 1)

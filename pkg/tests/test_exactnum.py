"""Tests for the exact combinatorial kernel: parsing, binomials, Stirling
numbers, Bernoulli numbers, Faulhaber power sums, Gaussian moments, and the
exact Gamma-ratio / alternating-sum closed forms."""

import math
from fractions import Fraction

import pytest

from srscorr.errors import DomainError
from srscorr.exactnum import (
    HalfInteger,
    alternating_fraction_sum,
    bernoulli,
    binomial,
    double_factorial_odd,
    falling_factorial,
    gamma_ratio,
    normal_moment,
    parse_rational,
    power_sum_coefficients,
    rational_str,
    stirling_first_unsigned,
    stirling_second,
    sum_of_powers,
)


# ---------------------------------------------------------------------------
# rational parsing / printing


def test_parse_rational_accepts_integers_and_fractions():
    assert parse_rational("3") == 3
    assert parse_rational("-7") == -7
    assert parse_rational("+2/5") == Fraction(2, 5)
    assert parse_rational("9/10") == Fraction(9, 10)
    assert parse_rational("-6/4") == Fraction(-3, 2)


def test_parse_rational_rejects_everything_else():
    for bad in ["", "0.5", "1e3", "2/0", "2/-3", "1/ 2", "a/b", "1//2", "/3"]:
        with pytest.raises(DomainError):
            parse_rational(bad)
    # surrounding whitespace is tolerated; the literal itself is strict
    assert parse_rational(" 1 ") == 1


def test_rational_str_is_canonical_and_round_trips():
    assert rational_str(Fraction(1, 3)) == "1/3"
    assert rational_str(Fraction(-2, 6)) == "-1/3"
    assert rational_str(Fraction(4, 2)) == "2"
    assert rational_str(0) == "0"
    for num in range(-9, 10):
        for den in range(1, 8):
            q = Fraction(num, den)
            assert parse_rational(rational_str(q)) == q


def test_half_integer_lattice():
    assert HalfInteger.from_rational(Fraction(3, 2)).twice_value == 3
    assert HalfInteger.from_rational(2).twice_value == 4
    assert HalfInteger(5).as_fraction() == Fraction(5, 2)
    assert HalfInteger(4).is_integer
    assert not HalfInteger(3).is_integer
    assert HalfInteger(1).is_positive
    assert not HalfInteger(0).is_positive
    with pytest.raises(DomainError):
        HalfInteger.from_rational(Fraction(1, 3))


# ---------------------------------------------------------------------------
# binomial and falling factorial


def test_binomial_values():
    assert binomial(5, 2) == 10
    assert binomial(7, 0) == 1
    assert binomial(4, 6) == 0
    assert binomial(3, -1) == 0


def test_binomial_matches_pascal_recurrence():
    for n in range(1, 12):
        for k in range(0, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_binomial_rejects_negative_n():
    with pytest.raises(DomainError):
        binomial(-1, 0)


def test_falling_factorial_values():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(Fraction(7, 2), 2) == Fraction(35, 4)
    assert falling_factorial(3, 5) == 0
    assert falling_factorial(Fraction(9, 4), 0) == 1


def test_falling_factorial_recurrence_and_errors():
    x = Fraction(13, 3)
    for j in range(1, 8):
        assert falling_factorial(x, j) == falling_factorial(x, j - 1) * (x - (j - 1))
    with pytest.raises(DomainError):
        falling_factorial(2, -1)


# ---------------------------------------------------------------------------
# Stirling numbers


def test_stirling_first_values():
    assert stirling_first_unsigned(4, 4) == 1
    assert stirling_first_unsigned(3, 1) == 2
    assert stirling_first_unsigned(5, 0) == 0
    assert stirling_first_unsigned(0, 0) == 1


def test_stirling_first_row_sums_are_factorials():
    # sum_v c(j, v) counts all permutations of j elements.
    for j in range(0, 10):
        assert sum(stirling_first_unsigned(j, v) for v in range(j + 1)) == math.factorial(j)


def test_stirling_first_recurrence():
    for j in range(1, 10):
        for v in range(0, j + 1):
            expected = stirling_first_unsigned(j - 1, v - 1) + (j - 1) * stirling_first_unsigned(j - 1, v)
            assert stirling_first_unsigned(j, v) == expected


def test_stirling_first_generates_rising_factorial_coefficients():
    # x(x+1)...(x+j-1) = sum_v c(j, v) x^v, checked pointwise.
    for j in range(0, 8):
        for x in [Fraction(1, 2), 2, Fraction(-3, 4), 5]:
            rising = math.prod([Fraction(x) + i for i in range(j)], start=Fraction(1))
            expanded = sum(stirling_first_unsigned(j, v) * Fraction(x) ** v for v in range(j + 1))
            assert rising == expanded


def test_stirling_second_values():
    assert stirling_second(2, 2) == 1
    assert stirling_second(4, 3) == 6
    assert stirling_second(2, 5) == 0
    assert stirling_second(0, 0) == 1
    assert stirling_second(6, 0) == 0


def test_stirling_second_recurrence():
    for m in range(1, 10):
        assert stirling_second(m, 0) == 0
        for k in range(1, m + 1):
            expected = k * stirling_second(m - 1, k) + stirling_second(m - 1, k - 1)
            assert stirling_second(m, k) == expected


def test_stirling_second_decomposes_powers_into_falling_factorials():
    # x^m = sum_k S(m, k) (x)_k at arbitrary rational points.
    for m in range(0, 9):
        for x in [3, Fraction(7, 2), Fraction(-5, 3), 11]:
            expanded = sum(stirling_second(m, k) * falling_factorial(x, k) for k in range(m + 1))
            assert expanded == Fraction(x) ** m


# ---------------------------------------------------------------------------
# Bernoulli numbers and power sums


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(3) == 0
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_odd_bernoulli_numbers_vanish():
    for p in range(3, 25, 2):
        assert bernoulli(p) == 0


def test_bernoulli_defining_recurrence():
    # sum_{i=0}^{p} C(p+1, i) B_i = 0 for p >= 1 (with B_1 = -1/2).
    for p in range(1, 16):
        total = sum(binomial(p + 1, i) * bernoulli(i) for i in range(p + 1))
        assert total == 0


def test_sum_of_powers_values():
    assert sum_of_powers(5, 1) == 10
    assert sum_of_powers(4, 2) == 14
    assert sum_of_powers(0, 3) == 0
    assert sum_of_powers(10, 0) == 10


def test_sum_of_powers_matches_direct_summation():
    for m in range(0, 7):
        for k in range(0, 30):
            assert sum_of_powers(k, m) == sum(i**m for i in range(k))


def test_power_sum_coefficients_leading_terms():
    # S_m(k) = k^(m+1)/(m+1) - k^m/2 + ..., and there is no constant term.
    for m in range(0, 10):
        coeffs = power_sum_coefficients(m)
        assert len(coeffs) == m + 2
        assert coeffs[0] == 0
        assert coeffs[m + 1] == Fraction(1, m + 1)
        if m >= 1:
            assert coeffs[m] == Fraction(-1, 2)


# ---------------------------------------------------------------------------
# Gaussian moments


def test_normal_moment_values():
    assert normal_moment(4) == 3
    assert normal_moment(8) == 105
    assert normal_moment(5) == 0
    assert normal_moment(0) == 1
    assert normal_moment(2) == 1
    assert normal_moment(10) == 945


def test_normal_moment_double_factorial_recursion():
    for k in range(2, 22, 2):
        assert normal_moment(k) == (k - 1) * normal_moment(k - 2)
        assert normal_moment(k) == double_factorial_odd(k - 1)
    assert double_factorial_odd(-1) == 1
    assert double_factorial_odd(7) == 105


# ---------------------------------------------------------------------------
# Gamma ratios and the alternating fraction sum


def _alternating_sum_direct(m, alpha, delta, gamma, beta):
    total = Fraction(0)
    for i in range(m):
        term = Fraction(alpha * i + delta, 1) / (gamma * i + beta)
        total += (-1) ** i * binomial(m - 1, i) * term
    return total


def test_gamma_ratio_values():
    assert gamma_ratio(1, Fraction(1, 2)) == 2
    assert gamma_ratio(2, Fraction(1, 2)) == Fraction(4, 3)
    assert gamma_ratio(3, 1) == Fraction(1, 3)
    assert gamma_ratio(1, 1) == 1
    assert gamma_ratio(4, 2) == Fraction(1, 20)


def test_gamma_ratio_is_the_alternating_binomial_sum():
    # G(m, beta) = sum_{i=0}^{m-1} (-1)^i C(m-1, i) / (i + beta).
    for m in range(1, 9):
        for beta in [Fraction(1, 2), 1, Fraction(3, 2), 2, 3, Fraction(7, 2)]:
            direct = sum(
                Fraction((-1) ** i * binomial(m - 1, i), 1) / (i + beta) for i in range(m)
            )
            assert gamma_ratio(m, beta) == direct


def test_gamma_ratio_functional_equation():
    # G(m+1, beta) = m/(m+beta) G(m, beta): contiguous Beta-function relation.
    for m in range(1, 10):
        for beta in [Fraction(1, 2), 1, 2, Fraction(5, 2)]:
            assert gamma_ratio(m + 1, beta) == Fraction(m, 1) / (m + beta) * gamma_ratio(m, beta)


def test_gamma_ratio_rejects_bad_beta():
    with pytest.raises(DomainError):
        gamma_ratio(3, Fraction(1, 3))
    with pytest.raises(DomainError):
        gamma_ratio(3, 0)
    with pytest.raises(DomainError):
        gamma_ratio(0, 1)


def test_alternating_fraction_sum_values():
    assert alternating_fraction_sum(2, 0, 1, 1, Fraction(1, 2)) == Fraction(4, 3)
    assert alternating_fraction_sum(1, 1, 0, 1, 1) == 0
    assert alternating_fraction_sum(3, 0, 1, 1, 1) == Fraction(1, 3)


def test_alternating_fraction_sum_matches_direct_summation():
    cases = [
        (0, 1),
        (1, 0),
        (1, 1),
        (Fraction(2, 3), Fraction(-1, 5)),
    ]
    for alpha, delta in cases:
        for gamma in [1, 2, Fraction(1, 3)]:
            for ratio in [Fraction(1, 2), 1, Fraction(3, 2), 2, 3]:
                beta = gamma * ratio
                for m in range(1, 8):
                    closed = alternating_fraction_sum(m, alpha, delta, gamma, beta)
                    assert closed == _alternating_sum_direct(m, alpha, delta, gamma, beta)


def test_alternating_fraction_sum_domain_errors():
    with pytest.raises(DomainError):
        alternating_fraction_sum(0, 0, 1, 1, 1)
    with pytest.raises(DomainError):
        alternating_fraction_sum(2, 0, 1, 0, 1)
    with pytest.raises(DomainError):
        alternating_fraction_sum(2, 0, 1, 1, Fraction(1, 3))
    with pytest.raises(DomainError):
        alternating_fraction_sum(2, 0, 1, 1, -1)

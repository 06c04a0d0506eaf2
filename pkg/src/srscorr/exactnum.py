"""Exact combinatorial kernel: binomials, Stirling numbers, Bernoulli numbers,
power sums, Gaussian moments, Gamma-function ratios, and the alternating
binomial sums built from them.

Everything here is exact.  Integer-valued quantities are computed as Python
ints; everything else is a ``fractions.Fraction``.  No floating point is used
anywhere in this module, so every equality elsewhere in the package that
bottoms out here is an equality of rational numbers, not an approximation.

Memo caches are plain dicts (or ``functools.cache``) with idempotent entries:
concurrent callers may duplicate a computation but always observe identical
values, so the functions are safe to call from multiple threads.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import cache

from .errors import DomainError

__all__ = [
    "Rational",
    "HalfInteger",
    "binomial",
    "falling_factorial",
    "stirling_first_unsigned",
    "stirling_second",
    "bernoulli",
    "power_sum_coefficients",
    "sum_of_powers",
    "normal_moment",
    "double_factorial_odd",
    "gamma_ratio",
    "alternating_fraction_sum",
    "kronecker_delta",
    "unit_step",
    "parse_rational",
    "rational_str",
]

# The package-wide exact scalar type.  ``fractions.Fraction`` already keeps
# numerator/denominator in lowest terms with a positive denominator, which is
# exactly the canonical form the serialization layer relies on.
Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the canonical rational literal ``p/q`` or ``p``.

    Only integer and slash forms are accepted; decimal strings such as
    ``"0.3"`` are rejected so that callers can never smuggle a float
    approximation into an exact computation.
    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise DomainError(f"malformed rational literal: {text!r} (expected 'p/q' or integer)")
    return Fraction(text.strip())


def rational_str(value: Fraction | int) -> str:
    """Canonical string form of an exact rational: ``p/q`` in lowest terms
    with positive denominator, or plain ``p`` when the denominator is 1."""
    return str(Fraction(value))


class HalfInteger:
    """An integer or half-integer, stored exactly as twice its value.

    The Gamma-ratio routines only admit arguments on the half-integer
    lattice; this type makes that restriction explicit instead of hiding it
    in a runtime denominator check scattered across call sites.
    """

    __slots__ = ("twice_value",)

    def __init__(self, twice_value: int):
        if not isinstance(twice_value, int):
            raise DomainError(f"twice_value must be an int, got {twice_value!r}")
        self.twice_value = twice_value

    @classmethod
    def from_rational(cls, value: Fraction | int) -> "HalfInteger":
        q = Fraction(value)
        if q.denominator not in (1, 2):
            raise DomainError(f"{q} is neither an integer nor a half-integer")
        return cls(int(q * 2))

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    @property
    def is_positive(self) -> bool:
        return self.twice_value > 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInteger):
            return self.twice_value == other.twice_value
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("HalfInteger", self.twice_value))

    def __repr__(self) -> str:
        return f"HalfInteger({self.twice_value}/2 = {self.as_fraction()})"


def kronecker_delta(n: int) -> int:
    """delta(n): 1 at n == 0, else 0."""
    return 1 if n == 0 else 0


def unit_step(n: int) -> int:
    """u(n): 1 for n >= 0, else 0."""
    return 1 if n >= 0 else 0


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(x: Fraction | int, j: int) -> Fraction:
    """(x)_j = x (x-1) ... (x-j+1), with (x)_0 = 1."""
    if j < 0:
        raise DomainError(f"falling_factorial requires j >= 0, got j={j}")
    out = Fraction(1)
    x = Fraction(x)
    for i in range(j):
        out *= x - i
    return out


@cache
def stirling_first_unsigned(j: int, v: int) -> int:
    """Unsigned Stirling number of the first kind: the number of
    permutations of j elements with v cycles.

    Computed from the triangular recurrence
    ``c(j, v) = (j - 1) c(j-1, v) + c(j-1, v-1)``.  The count is 0 outside
    the triangle 0 <= v <= j, including for negative v, so the recurrence
    can be applied without boundary special-casing.
    """
    if j < 0:
        raise DomainError(f"stirling_first_unsigned requires j >= 0, got j={j}")
    if j == 0:
        return 1 if v == 0 else 0
    if v <= 0 or v > j:
        return 0
    return (j - 1) * stirling_first_unsigned(j - 1, v) + stirling_first_unsigned(j - 1, v - 1)


@cache
def stirling_second(m: int, k: int) -> int:
    """Stirling number of the second kind: the number of partitions of an
    m-element set into k non-empty blocks.

    Computed from ``S(m, k) = k S(m-1, k) + S(m-1, k-1)``.
    """
    if m < 0 or k < 0:
        raise DomainError(f"stirling_second requires m, k >= 0, got ({m}, {k})")
    if m == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > m:
        return 0
    return k * stirling_second(m - 1, k) + stirling_second(m - 1, k - 1)


@cache
def bernoulli(p: int) -> Fraction:
    """Bernoulli number B_p in the convention with B_1 = -1/2.

    Defined by B_0 = 1 and the recurrence
    ``sum_{j=0}^{m} C(m+1, j) B_j = 0`` for m >= 1, i.e. the recurrence is
    the ground truth here rather than any zeta-function shortcut.
    """
    if p < 0:
        raise DomainError(f"bernoulli requires p >= 0, got p={p}")
    if p == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(p):
        acc += binomial(p + 1, j) * bernoulli(j)
    return -acc / (p + 1)


@cache
def power_sum_coefficients(m: int) -> tuple[Fraction, ...]:
    """Coefficients (lowest degree first) of the degree-(m+1) polynomial
    F_m with F_m(k) = sum_{p=0}^{k-1} p^m for every integer k >= 0.

    Faulhaber's closed form: F_m(k) = (1/(m+1)) sum_{p=0}^{m} C(m+1, p) B_p
    k^(m+1-p).  The polynomial has no constant term.
    """
    if m < 0:
        raise DomainError(f"power_sum_coefficients requires m >= 0, got m={m}")
    coeffs = [Fraction(0)] * (m + 2)
    for p in range(m + 1):
        coeffs[m + 1 - p] = Fraction(binomial(m + 1, p), m + 1) * bernoulli(p)
    return tuple(coeffs)


def sum_of_powers(k: int, m: int) -> Fraction:
    """sum_{p=0}^{k-1} p^m evaluated through the Bernoulli closed form
    (with the 0^0 = 1 convention for m = 0).  Always integer-valued."""
    if k < 0 or m < 0:
        raise DomainError(f"sum_of_powers requires k, m >= 0, got ({k}, {m})")
    coeffs = power_sum_coefficients(m)
    out = Fraction(0)
    kk = Fraction(1)
    for c in coeffs:
        out += c * kk
        kk *= k
    return out


def normal_moment(k: int) -> int:
    """E Z^k for Z standard normal: 0 for odd k and
    k! / (2^(k/2) (k/2)!) = (k-1)!! for even k."""
    if k < 0:
        raise DomainError(f"normal_moment requires k >= 0, got k={k}")
    if k % 2 == 1:
        return 0
    h = k // 2
    return math.factorial(k) // (2**h * math.factorial(h))


def double_factorial_odd(t: int) -> int:
    """Product of the positive odd integers <= t, with the empty product 1
    (so t = -1 and t = 0 both give 1)."""
    if t < -1:
        raise DomainError(f"double_factorial_odd requires t >= -1, got t={t}")
    out = 1
    for q in range(1, t + 1, 2):
        out *= q
    return out


def gamma_ratio(m: int, beta: HalfInteger | Fraction | int) -> Fraction:
    """Gamma(m) Gamma(beta) / Gamma(m + beta) as an exact rational.

    Requires m >= 1 and beta a positive integer or half-integer; on that
    lattice the square roots of pi coming from Gamma at half-integers cancel
    between numerator and denominator, so the ratio is rational:

    * integer beta = b:     (m-1)! (b-1)! / (m+b-1)!
    * half-int beta = b+1/2: (m-1)! 2^m (2b-1)!! / (2(m+b)-1)!!
    """
    if m < 1:
        raise DomainError(f"gamma_ratio requires m >= 1, got m={m}")
    if not isinstance(beta, HalfInteger):
        beta = HalfInteger.from_rational(beta)
    if not beta.is_positive:
        raise DomainError(f"gamma_ratio requires beta > 0, got beta={beta.as_fraction()}")
    if beta.is_integer:
        b = beta.twice_value // 2
        return Fraction(math.factorial(m - 1) * math.factorial(b - 1), math.factorial(m + b - 1))
    b = (beta.twice_value - 1) // 2
    num = math.factorial(m - 1) * 2**m * double_factorial_odd(2 * b - 1)
    den = double_factorial_odd(2 * (m + b) - 1)
    return Fraction(num, den)


def alternating_fraction_sum(
    m: int,
    alpha: Fraction | int,
    delta: Fraction | int,
    gamma: Fraction | int,
    beta: Fraction | int,
) -> Fraction:
    """Closed form of the alternating binomial sum

        sum_{n=0}^{m-1} (-1)^n C(m-1, n) (alpha n + delta) / (gamma n + beta)

    namely ``(alpha/gamma) delta(m-1) + G(m, beta/gamma) (delta - alpha
    beta/gamma) / gamma`` with G the exact Gamma ratio above.  The ratio
    beta/gamma must be a positive integer or half-integer so that G is
    rational; all coefficients are otherwise arbitrary rationals.
    """
    if m < 1:
        raise DomainError(f"alternating_fraction_sum requires m >= 1, got m={m}")
    alpha, delta, gamma, beta = (Fraction(x) for x in (alpha, delta, gamma, beta))
    if gamma == 0:
        raise DomainError("alternating_fraction_sum requires gamma != 0")
    ratio = beta / gamma
    half = HalfInteger.from_rational(ratio)  # raises DomainError off the lattice
    if not half.is_positive:
        raise DomainError(f"alternating_fraction_sum requires beta/gamma > 0, got {ratio}")
    out = (alpha / gamma) * kronecker_delta(m - 1)
    out += gamma_ratio(m, half) * (delta - alpha * ratio) / gamma * unit_step(m - 1)
    return out

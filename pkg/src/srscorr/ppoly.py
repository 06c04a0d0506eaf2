"""Dense exact polynomials and the weighted-prefix recursion family used to
expand shifted falling factorials into powers.

The family is defined, for integers k >= 0, by

    P[k, 0](j) = 1
    P[k, m](j) = sum_{q=1}^{k-m} q P[k, m-1](q+1)  -  sum_{q=1}^{j-1} q P[k, m-1](q+1)

so each level is "total weighted prefix minus weighted prefix up to j".
``p_poly`` materialises P[k, m] as an exact polynomial in j by pushing the
prefix sums through Faulhaber's formula; ``p0_eval`` evaluates the companion
suffix form

    P0[k, 0](j) = 1
    P0[k, m](j) = sum_{q=j}^{k-m} q P0[k, m-1](q+1)

pointwise by direct recursion.  The two agree on 0 <= j <= k, which is one of
the cross-checks wired into the verification suite.  The payoff of the family
is the expansion

    (x - k)_(j-k) = sum_{v=0}^{j-k} (-1)^v P0[j, v](k) x^(j-k-v)

implemented by ``falling_factorial_via_p0`` and checked against both direct
falling factorials and a brute-force elementary-sum oracle.

Caches are dicts with idempotent entries; concurrent use is safe (duplicate
work at worst, identical results always).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import cache

from .errors import DomainError
from .exactnum import power_sum_coefficients

__all__ = [
    "Poly",
    "PKey",
    "weighted_prefix_poly",
    "p_poly",
    "p0_eval",
    "elementary_sum_oracle",
    "falling_factorial_via_p0",
]

# Cache key for the polynomial family: (k, m).
PKey = tuple[int, int]


class Poly:
    """Immutable dense polynomial with exact rational coefficients.

    Coefficients are stored lowest degree first with trailing zeros stripped;
    the zero polynomial is the empty tuple and reports degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x^i (zero outside the stored range)."""
        if i < 0:
            raise DomainError(f"coefficient index must be >= 0, got {i}")
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for exact arguments."""
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError(f"Poly exponent must be a non-negative int, got {exponent!r}")
        out = Poly([1])
        base = self
        for _ in range(exponent):
            out = out * base
        return out

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)) via Horner over polynomials."""
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * inner + Poly([c])
        return out

    def shifted(self, a) -> "Poly":
        """p(x + a)."""
        return self.compose(Poly([a, 1]))

    def coeff_strings(self) -> list[str]:
        """Canonical serialization: list of 'p/q' strings, lowest degree first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items) -> "Poly":
        return cls([Fraction(s) for s in items])

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly()"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return "Poly[" + " + ".join(terms) + "]"


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly([value])
    return NotImplemented


Poly.ZERO = Poly()
Poly.ONE = Poly([1])
Poly.X = Poly([0, 1])


@cache
def _power_sum_poly(m: int) -> Poly:
    """Polynomial F_m with F_m(j) = sum_{p=0}^{j-1} p^m for integer j >= 0."""
    return Poly(power_sum_coefficients(m))


def weighted_prefix_poly(q_poly: Poly) -> Poly:
    """Polynomial S with S(j) = sum_{q=1}^{j-1} q * q_poly(q+1) for every
    integer j >= 1 (and S(0) = 0, matching the empty sum).

    Built exactly: expand t(x) = x * q_poly(x+1), then replace each power
    x^m by its Faulhaber prefix-sum polynomial.  If q_poly has degree d, the
    result has degree d + 2.
    """
    if not isinstance(q_poly, Poly):
        raise DomainError(f"weighted_prefix_poly expects a Poly, got {q_poly!r}")
    t = Poly.X * q_poly.shifted(1)
    out = Poly()
    for m, c in enumerate(t.coeffs):
        if c != 0:
            out = out + c * _power_sum_poly(m)
    return out


_P_CACHE: dict[PKey, Poly] = {}


def p_poly(k: int, m: int) -> Poly:
    """The recursion polynomial P[k, m] as an exact polynomial in j.

    P[k, m] = (total weighted prefix over q = 1..k-m) - S(j) where S is the
    weighted prefix polynomial of P[k, m-1].  For m <= k the constant head
    equals S(k-m+1); for m > k the defining sum is empty, so the head is 0.
    Results are memoised by (k, m).
    """
    if k < 0 or m < 0:
        raise DomainError(f"p_poly requires k, m >= 0, got ({k}, {m})")
    key: PKey = (k, m)
    hit = _P_CACHE.get(key)
    if hit is not None:
        return hit
    if m == 0:
        poly = Poly.ONE
    else:
        s = weighted_prefix_poly(p_poly(k, m - 1))
        head = s(k - m + 1) if k - m + 1 >= 0 else Fraction(0)
        poly = Poly([head]) - s
    _P_CACHE[key] = poly
    return poly


_P0_CACHE: dict[tuple[int, int, int], int] = {}


def p0_eval(k: int, m: int, j: int) -> int:
    """Pointwise value of the suffix form P0[k, m](j).

    Direct recursion: P0[k, m](j) = sum_{q=j}^{k-m} q * P0[k, m-1](q+1),
    with the empty sum equal to 0 and P0[k, 0] identically 1.  Values are
    integers; memoised by (k, m, j).
    """
    if k < 0 or m < 0 or j < 0:
        raise DomainError(f"p0_eval requires k, m, j >= 0, got ({k}, {m}, {j})")
    if m == 0:
        return 1
    key = (k, m, j)
    hit = _P0_CACHE.get(key)
    if hit is not None:
        return hit
    total = 0
    for q in range(j, k - m + 1):
        total += q * p0_eval(k, m - 1, q + 1)
    _P0_CACHE[key] = total
    return total


def elementary_sum_oracle(j_top: int, v: int, u: int) -> int:
    """Brute-force elementary symmetric sum over an integer window:

        sum over u <= l_1 < l_2 < ... < l_v <= j_top of  l_1 l_2 ... l_v

    with the empty product equal to 1 (so v = 0 always gives 1, even for an
    empty window, which is why j_top = u - 1 is admitted).  This is the
    independent combinatorial oracle for ``p0_eval``.
    """
    if v < 0 or u < 0:
        raise DomainError(f"elementary_sum_oracle requires v, u >= 0, got (v={v}, u={u})")
    if j_top < u - 1:
        raise DomainError(f"elementary_sum_oracle window ends before it starts: j_top={j_top}, u={u}")
    total = 0
    for combo in itertools.combinations(range(u, j_top + 1), v):
        total += math.prod(combo)
    return total


def falling_factorial_via_p0(j: int, k: int, x: Fraction | int) -> Fraction:
    """(x - k)_(j - k) reconstructed from the suffix-form expansion

        sum_{v=0}^{j-k} (-1)^v P0[j, v](k) x^(j-k-v).

    Requires 0 <= k <= j.
    """
    if k < 0 or j < k:
        raise DomainError(f"falling_factorial_via_p0 requires 0 <= k <= j, got (j={j}, k={k})")
    x = Fraction(x)
    total = Fraction(0)
    for v in range(j - k + 1):
        coeff = p0_eval(j, v, k)
        if coeff:
            total += (-1) ** v * coeff * x ** (j - k - v)
    return total

"""High-order inclusion correlations of simple random sampling and their
scaled large-population limits.

For a simple random sample of size n drawn without replacement from a
population of N units, let 1_A be the inclusion indicator of unit A and
f = n/N the sampling fraction.  The k-th order inclusion correlation is

    Corr(k) = E prod_{A in H} (1_A - f)        for any k distinct units H,

which by exchangeability depends on H only through k.  ``corr_exact``
computes it exactly from the hypergeometric moment expansion

    Corr(k) = sum_{j=0}^{k} C(k, j) (n)_j / (N)_j (-n/N)^(k-j).

Scaled limits (``theorem_limit``): with f fixed and e(k) the parity exponent
(k+1)//2, the sequence N^e(k) Corr(k) converges to

    even k:  (f (f-1))^(k/2) E Z^k
    odd  k:  (f (f-1))^((k-1)/2) (2f - 1) ((k-1)/3) E Z^(k+1)

where Z is standard normal.  ``alpha_coefficients`` expands N^k f^k-weighted
numerators of Corr(k) into a table of integer coefficients of f-powers and
N-powers (via the suffix-form recursion polynomials), and
``coefficient_limit`` gives the limit of each scaled f-coefficient; summing
those limits against powers of f recovers the theorem limit, a polynomial
identity the verification suite checks exactly.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import DomainError
from .exactnum import binomial, falling_factorial, normal_moment
from .ppoly import p0_eval

__all__ = [
    "corr_exact",
    "parity_exponent",
    "theorem_limit",
    "LimitSpec",
    "limit_spec",
    "AlphaTable",
    "alpha_coefficients",
    "coefficient_limit",
    "CorrRecord",
    "evaluate_correlation",
    "convergence_scan",
]


def corr_exact(k: int, N: int, n: int) -> Fraction:
    """Exact k-th order inclusion correlation for a size-n simple random
    sample from N units.

    Valid for 0 <= k <= N and 0 <= n <= N; k may exceed n (the falling
    factorial (n)_j kills the overweight terms).  Corr(0) = 1 and
    Corr(1) = 0 for every design.
    """
    if N < 1:
        raise DomainError(f"corr_exact requires N >= 1, got N={N}")
    if not 0 <= n <= N:
        raise DomainError(f"corr_exact requires 0 <= n <= N, got n={n}, N={N}")
    if not 0 <= k <= N:
        raise DomainError(f"corr_exact requires 0 <= k <= N, got k={k}, N={N}")
    f = Fraction(n, N)
    total = Fraction(0)
    for j in range(k + 1):
        c = binomial(k, j)
        ratio = falling_factorial(n, j) / falling_factorial(N, j)
        total += c * ratio * (-f) ** (k - j)
    return total


def parity_exponent(k: int) -> int:
    """e(k) = k/2 for even k, (k+1)/2 for odd k: the power of N at which
    N^e(k) Corr(k) has a finite non-trivial limit."""
    if k < 0:
        raise DomainError(f"parity_exponent requires k >= 0, got k={k}")
    return (k + k % 2) // 2


def theorem_limit(k: int, f: Fraction | int) -> Fraction:
    """Limit of N^e(k) Corr(k) as N grows with sampling fraction f fixed.

    Exact rational in f.  The parity split gives, with E Z^k the standard
    normal moment,

        even k:  (f(f-1))^(k/2) E Z^k
        odd  k:  (f(f-1))^((k-1)/2) (2f-1) ((k-1)/3) E Z^(k+1)

    The formulas extend consistently to k = 0 (limit 1) and k = 1 (limit 0),
    matching Corr(0) = 1 and Corr(1) = 0, so those orders are admitted too.
    """
    if k < 0:
        raise DomainError(f"theorem_limit requires k >= 0, got k={k}")
    f = Fraction(f)
    if not 0 < f < 1:
        raise DomainError(f"theorem_limit requires 0 < f < 1, got f={f}")
    ff = f * (f - 1)
    if k % 2 == 0:
        return ff ** (k // 2) * normal_moment(k)
    return ff ** ((k - 1) // 2) * (2 * f - 1) * Fraction(k - 1, 3) * normal_moment(k + 1)


@dataclass(frozen=True, slots=True)
class LimitSpec:
    """A scaled-limit statement: N^exponent Corr(k) -> value at fraction f."""

    k: int
    f: Fraction
    value: Fraction
    exponent: int


def limit_spec(k: int, f: Fraction | int) -> LimitSpec:
    """Bundle ``theorem_limit`` with its parity exponent."""
    f = Fraction(f)
    return LimitSpec(k=k, f=f, value=theorem_limit(k, f), exponent=parity_exponent(k))


@dataclass(frozen=True)
class AlphaTable:
    """Integer coefficient table of the correlation numerator.

    For fixed k, Corr(k) at design (N, n) factors as alpha(k, f) / (N)_k
    where f = n/N and

        alpha(k, f) = sum_{v=0}^{k} f^(k-v) sum_{r=0}^{k} coeffs[v][r] N^r.

    The table is built once per k from the suffix-form recursion polynomials
    and is exact; reconstructing Corr through it is an independent route that
    must agree with ``corr_exact`` on every admissible design.

    ``alpha(k, f)`` is well-defined for any rational f in (0, 1), but only
    fractions whose denominator divides N correspond to a realizable design
    (n = f N must be an integer).
    """

    k: int
    coeffs: tuple[tuple[int, ...], ...]  # coeffs[v][r], both indices 0..k

    def f_coefficient(self, v: int, N: int) -> Fraction:
        """sum_r coeffs[v][r] N^r: the coefficient of f^(k-v) in alpha."""
        if not 0 <= v <= self.k:
            raise DomainError(f"f_coefficient requires 0 <= v <= {self.k}, got v={v}")
        total = 0
        for r, c in enumerate(self.coeffs[v]):
            if c:
                total += c * N**r
        return Fraction(total)

    def alpha(self, f: Fraction, N: int) -> Fraction:
        """alpha(k, f) evaluated at population size N."""
        f = Fraction(f)
        total = Fraction(0)
        for v in range(self.k + 1):
            inner = self.f_coefficient(v, N)
            if inner:
                total += f ** (self.k - v) * inner
        return total

    def corr(self, N: int, n: int) -> Fraction:
        """Reconstruct Corr(k) = alpha(k, n/N) / (N)_k.  Requires N >= k so
        the falling factorial in the denominator is non-zero."""
        if N < self.k:
            raise DomainError(f"AlphaTable.corr requires N >= k={self.k}, got N={N}")
        if not 0 <= n <= N:
            raise DomainError(f"AlphaTable.corr requires 0 <= n <= N, got n={n}, N={N}")
        return self.alpha(Fraction(n, N), N) / falling_factorial(N, self.k)


def alpha_coefficients(k: int) -> AlphaTable:
    """Build the integer coefficient table of alpha(k, f).

    Expand both falling factorials in the summand of the moment form through
    the suffix recursion polynomials P0:

        (fN)_j     = sum_v (-1)^v P0[j, v](1) (fN)^(j-v)
        (N-j)_(k-j) = sum_i (-1)^i P0[k, i](j) N^(k-j-i)

    multiply by C(k, j) (-1)^j, apply the (-f)^k prefactor, and collect the
    coefficient of f^(k-v) N^(k-v-i).  All entries are integers.
    """
    if k < 0:
        raise DomainError(f"alpha_coefficients requires k >= 0, got k={k}")
    table = [[0] * (k + 1) for _ in range(k + 1)]
    for j in range(k + 1):
        cj = binomial(k, j)
        for v in range(j + 1):
            pv = p0_eval(j, v, 1)
            if pv == 0:
                continue
            for i in range(k - j + 1):
                pi = p0_eval(k, i, j)
                if pi == 0:
                    continue
                r = k - v - i
                sign = -1 if (j + k + v + i) % 2 else 1
                table[v][r] += sign * cj * pv * pi
    return AlphaTable(k=k, coeffs=tuple(tuple(row) for row in table))


def coefficient_limit(k: int, v: int) -> Fraction:
    """Limit of the scaled f^(k-v) coefficient of Corr(k):

        lim N^e(k) [coefficient of f^(k-v) in alpha(k, f) / (N)_k]

    Even k:  (-1)^v E Z^k C(k/2, v) for v <= k/2, else 0.
    Odd  k:  (2/3) (-1)^v (k-1) (k+1-v) / (k+1) E Z^(k+1) C((k+1)/2, v)
             for v <= (k+1)/2, else 0.
    """
    if k < 0 or v < 0:
        raise DomainError(f"coefficient_limit requires k, v >= 0, got ({k}, {v})")
    if k % 2 == 0:
        h = k // 2
        if v > h:
            return Fraction(0)
        return Fraction((-1) ** v * normal_moment(k) * binomial(h, v))
    h = (k + 1) // 2
    if v > h:
        return Fraction(0)
    return (
        Fraction(2, 3)
        * (-1) ** v
        * (k - 1)
        * Fraction(k + 1 - v, k + 1)
        * normal_moment(k + 1)
        * binomial(h, v)
    )


@dataclass(frozen=True)
class CorrRecord:
    """One evaluated design: the exact correlation, its N^e(k) scaling, the
    limit it converges to, and the exact gap between the two."""

    k: int
    N: int
    n: int
    f: Fraction  # realized sampling fraction n/N
    corr: Fraction
    scaled: Fraction  # N^e(k) * corr
    limit: Fraction
    abs_error: Fraction  # |scaled - limit|


def evaluate_correlation(k: int, N: int, n: int, limit_f: Fraction | None = None) -> CorrRecord:
    """Evaluate one design into a :class:`CorrRecord`.

    ``limit_f`` selects the fraction at which the limit is evaluated;
    convergence scans pass their target fraction here (the realized n/N is
    still reported in the record), while single-design evaluation defaults
    to the realized fraction.
    """
    corr = corr_exact(k, N, n)
    scaled = Fraction(N) ** parity_exponent(k) * corr
    f_realized = Fraction(n, N)
    limit = theorem_limit(k, f_realized if limit_f is None else limit_f)
    return CorrRecord(
        k=k,
        N=N,
        n=n,
        f=f_realized,
        corr=corr,
        scaled=scaled,
        limit=limit,
        abs_error=abs(scaled - limit),
    )


def convergence_scan(k: int, f: Fraction | int, N_grid) -> list[CorrRecord]:
    """Evaluate Corr(k) along an ascending grid of population sizes at a
    fixed target fraction f.

    For each N the sample size is the half-up rounding n = floor(f N + 1/2);
    the limit column is evaluated at the target f (not at the realized n/N),
    so the error column isolates pure finite-N convergence.  Grid entries
    whose rounded n lands on 0 or N have no interior design; they are
    skipped with a warning and the scan continues.
    """
    if k < 2:
        raise DomainError(f"convergence_scan requires k >= 2, got k={k}")
    f = Fraction(f)
    if not 0 < f < 1:
        raise DomainError(f"convergence_scan requires 0 < f < 1, got f={f}")
    grid = [int(N) for N in N_grid]
    if not grid:
        raise DomainError("convergence_scan requires a non-empty grid")
    if any(N < 2 for N in grid):
        raise DomainError(f"convergence_scan requires every N >= 2, got {grid}")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError(f"convergence_scan requires a strictly ascending grid, got {grid}")
    records: list[CorrRecord] = []
    for N in grid:
        n = floor(f * N + Fraction(1, 2))
        if n <= 0 or n >= N:
            warnings.warn(
                f"convergence_scan: N={N} rounds to boundary sample size n={n}; entry skipped",
                stacklevel=2,
            )
            continue
        records.append(evaluate_correlation(k, N, n, limit_f=f))
    return records

"""A walk through the exact combinatorial kernel.

Everything here is integer or rational arithmetic — no floats anywhere —
so every printed equality is exact, not approximate.
"""

from fractions import Fraction

from srscorr.exactnum import (
    alternating_fraction_sum,
    bernoulli,
    binomial,
    gamma_ratio,
    normal_moment,
    stirling_first_unsigned,
    stirling_second,
    sum_of_powers,
)

print("Stirling triangle (first kind, unsigned): rows j = 0..6")
for j in range(7):
    print(f"  j={j}: ", [stirling_first_unsigned(j, v) for v in range(j + 1)])

print("\nStirling triangle (second kind): rows m = 0..6")
for m in range(7):
    print(f"  m={m}: ", [stirling_second(m, k) for k in range(m + 1)])

print("\nBernoulli numbers B_0..B_12 (odd ones vanish past B_1):")
print(" ", [str(bernoulli(p)) for p in range(13)])

print("\nFaulhaber closed forms: sum_{p<k} p^m versus direct summation")
for m in range(5):
    k = 20
    closed = sum_of_powers(k, m)
    direct = sum(p**m for p in range(k))
    print(f"  m={m}: closed={closed}  direct={direct}  equal={closed == direct}")

print("\nGaussian moments EZ^k (double factorials for even k):")
print(" ", [normal_moment(k) for k in range(11)])

print("\nExact Gamma ratios G(m, beta) = Gamma(m) Gamma(beta) / Gamma(m + beta)")
print("for integer and half-integer beta — these are the closed forms behind")
print("the alternating binomial sums:")
for beta in (Fraction(1, 2), 1, Fraction(3, 2), 2):
    row = [str(gamma_ratio(m, beta)) for m in range(1, 6)]
    print(f"  beta={str(beta):>3}: ", row)

print("\nThe identity the whole limit computation leans on:")
print("  sum_n (-1)^n C(m-1,n) (alpha n + delta)/(gamma n + beta)")
print("collapses to a single Gamma-ratio term.  Checking a lattice of cases:")
checked = 0
for m in range(1, 9):
    for alpha, delta in ((0, 1), (1, 0), (2, -3)):
        for gamma in (1, 2):
            for ratio in (Fraction(1, 2), 1, 2):
                beta = gamma * ratio
                direct = sum(
                    Fraction((-1) ** n * binomial(m - 1, n) * (alpha * n + delta), 1)
                    / (gamma * n + beta)
                    for n in range(m)
                )
                assert alternating_fraction_sum(m, alpha, delta, gamma, beta) == direct
                checked += 1
print(f"  {checked} cases, all exactly equal.")

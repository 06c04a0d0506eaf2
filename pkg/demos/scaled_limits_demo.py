"""The scaled limits of the inclusion correlations.

Corr(k) measures the joint excess inclusion of k fixed units under simple
random sampling without replacement.  Scaled by N^e(k) with
e(k) = ceil(k/2), it converges to a polynomial in the sampling fraction f
whose constants are Gaussian moments: (k-1)!! for even k, and
(k-1)/3 * k!! ... spelled out below for odd k.
"""

from fractions import Fraction

from srscorr.correlation import corr_exact, limit_spec, parity_exponent, theorem_limit
from srscorr.exactnum import normal_moment
from srscorr.report import decimal_str

print("Limit values at f = 1/3:")
f = Fraction(1, 3)
for k in range(2, 10):
    spec = limit_spec(k, f)
    print(
        f"  k={k}: N^{spec.exponent} Corr({k}) -> {str(spec.value):>10}"
        f"  ({decimal_str(spec.value, 6)})"
    )

print("\nThe constants in front are Gaussian moments:")
print("  even k:  EZ^k = (k-1)!!        ->", [normal_moment(k) for k in (2, 4, 6, 8)])
print("  odd k:   (k-1)/3 * EZ^(k+1)    ->", [Fraction(k - 1, 3) * normal_moment(k + 1) for k in (3, 5, 7, 9)])

print("\nOdd correlations vanish at f = 1/2 (the 2f - 1 factor):")
for k in (3, 5, 7, 9):
    print(f"  k={k}: limit at f=1/2 is {theorem_limit(k, Fraction(1, 2))}")

print("\nHow close is a finite population?  N = 600, f = 1/3 (so n = 200):")
print("(the k=3 and k=4 rows agree exactly — at n = N/3 the third and fourth")
print("correlations coincide as rationals at every N, not only in the limit)")
for k in range(2, 8):
    e = parity_exponent(k)
    scaled = Fraction(600) ** e * corr_exact(k, 600, 200)
    lim = theorem_limit(k, f)
    print(
        f"  k={k}: scaled {decimal_str(scaled, 8)}  limit {decimal_str(lim, 8)}"
        f"  gap {decimal_str(abs(scaled - lim), 8)}"
    )

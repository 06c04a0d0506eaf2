"""The recursion polynomials P[k, m] and their integer suffix values.

These polynomials drive the finite-population correlation recursion: they
vanish on a whole integer window (which is what terminates the recursion),
their top coefficients control the N -> infinity limit, and their values
P0[j, v](k) are elementary symmetric sums that expand shifted falling
factorials into powers.
"""

from fractions import Fraction

from srscorr.exactnum import falling_factorial
from srscorr.ppoly import elementary_sum_oracle, falling_factorial_via_p0, p0_eval, p_poly

k = 7
print(f"P[{k}, m] for m = 0..3:")
for m in range(4):
    print(f"  m={m}: {p_poly(k, m)!r}")

print(f"\nEach P[{k}, m] vanishes on the window j = {k}-m+1 .. {k}:")
for m in range(1, 4):
    window = list(range(k - m + 1, k + 1))
    values = [p_poly(k, m)(j) for j in window]
    print(f"  m={m}: window {window} -> {values}")

print("\nLeading coefficients are k-independent: coefficient of j^(2m) is")
print("(-1)^m / (2^m m!), and of j^(2m-1) is (-1)^m m(2m-5) / (3 * 2^m m!).")
fact = 1
for m in range(1, 5):
    fact *= m
    lead = Fraction((-1) ** m, 2**m * fact)
    for kk in range(m, m + 3):
        assert p_poly(kk, m).coefficient(2 * m) == lead
    print(f"  m={m}: j^{2 * m} coefficient {lead} (checked k = {m}..{m + 2})")

print("\nThe suffix values P0[j, v](k) are elementary symmetric sums of the")
print("window {k, ..., j-1}; that is exactly what expands a shifted falling")
print("factorial into monomials:")
j, kk = 6, 2
for v in range(j - kk + 1):
    print(
        f"  v={v}: P0[{j},{v}]({kk}) = {p0_eval(j, v, kk)}"
        f" = e_{v}({{{kk},...,{j - 1}}}) = {elementary_sum_oracle(j - 1, v, kk)}"
    )

x = Fraction(19, 3)
lhs = falling_factorial_via_p0(j, kk, x)
rhs = falling_factorial(x - kk, j - kk)
print(f"\n(x - {kk})_({j - kk}) at x = {x}: expansion {lhs}, product {rhs}, equal: {lhs == rhs}")

"""Rising factorials, their p-parts, and the prime-power descent ratios.

(x)_n factors as (-1)^n * f * gamma_p(x+n)/gamma_p(x) where f is the product
of the p-divisible factors x+j.  Iterating this across truncation lengths
(p^r - 3)/4 -> (p^{r-2} - 3)/4 produces closed-form ratios in gamma values,
checked here in exact arithmetic to four p-adic digits.
"""

from fractions import Fraction

from supercong import (PadicContext, check_descent, check_gamma_factorization,
                       check_half_descent, p_factor_split, product_identity,
                       rising_exact)

print("exact rising factorials:")
print(f"  (1/4)_3 = {rising_exact(Fraction(1, 4), 3)}")
print(f"  (1)_5   = {rising_exact(1, 5)}")

s = p_factor_split(Fraction(1, 4), 3, 3)
print(f"\n3-factor split of (1/4)_3: p_part = {s.p_part}, "
      f"unit_part = {s.unit_part}, product = {s.exact}")

ctx = PadicContext(3, 4)
print("\ngamma factorization of (x)_n, checked mod 3^4:")
for x, n in ((Fraction(1, 4), 3), (Fraction(1), 5), (Fraction(1, 2), 40)):
    print(f"  x = {x}, n = {n}: {check_gamma_factorization(x, n, ctx)}")

print("\ndescent ratios at (p, r) = (3, 3), (3, 5), (7, 3), all mod p^4:")
for p, r in ((3, 3), (3, 5), (7, 3)):
    ctx = PadicContext(p, 4)
    verdicts = [check_descent(v, p, r, ctx) for v in "abc"]
    verdicts.append(check_half_descent(p, r, ctx))
    print(f"  ({p}, {r}): a, b, c, half -> {verdicts}")

print("\ntelescoping prefactor identity prod (4k-2)/(4k-3) = (1/2)_m/(1/4)_m:")
for m in (0, 2, 6, 25):
    lhs, rhs = product_identity(m)
    print(f"  m = {m}: {lhs} = {rhs} -> {lhs == rhs}")

"""The p-adic gamma function and its functional identities.

Gamma_p(n) = (-1)^n * product of j < n coprime to p.  Rational arguments in
Z_p are handled through their integer representative mod p^M, which is exact
to M digits.  The reflection and step identities below hold on the nose and
double as a correctness harness for the implementation.
"""

from fractions import Fraction

from supercong import (PadicContext, check_ratio, check_reflection, gamma_int,
                       gamma_rational, rep_mod_p)

ctx = PadicContext(7, 4)

print("integer values:")
for n in range(6):
    print(f"  gamma_7({n}) = {gamma_int(n, ctx)}")

print("\nrational arguments (all units):")
for x in (Fraction(1, 2), Fraction(1, 4), Fraction(3, 4), Fraction(-13, 5)):
    g = gamma_rational(x, ctx)
    print(f"  gamma_7({x}) = {g}")

half = gamma_rational(Fraction(1, 2), ctx)
print(f"\ngamma_7(1/2)^2 = {half * half}   "
      f"(a sign, since its square is (-1)^{rep_mod_p(Fraction(1, 2), 7)})")

print("\nreflection gamma(x) gamma(1-x) = (-1)^{rep(x)}:")
for x in (Fraction(1, 4), Fraction(1, 2), Fraction(2, 3)):
    print(f"  x = {x}: {check_reflection(x, ctx)}")

print("\nstep ratio gamma(x+1)/gamma(x) = -x (unit x) or -1 (p | x):")
for x in (Fraction(1, 4), Fraction(7, 1), Fraction(0)):
    print(f"  x = {x}: {check_ratio(x, ctx)}")

print("\nreduced-digit evaluation (cheaper, tracked precision):")
g2 = gamma_rational(Fraction(1, 4), ctx, digits=2)
print(f"  gamma_7(1/4) to 2 digits: {g2}, effective precision "
      f"{g2.effective_precision}")

"""Tour of the exact p-adic number type.

Every value is p^valuation * unit with the unit coprime to p, plus a record
of how many digits are actually known.  Watch what cancellation does to that
record: the library refuses to certify congruences beyond it.
"""

from fractions import Fraction

from supercong import PadicContext, PadicNum, PrecisionError, congruent_mod

ctx = PadicContext(p=3, precision=6)
print(f"context: p = {ctx.p}, {ctx.precision} digits, modulus {ctx.modulus}")

x = PadicNum.from_rational(Fraction(1, 4), ctx)
print(f"1/4 as a 3-adic number: {x}  (check: 4 * {x.unit} mod 3^6 = "
      f"{4 * x.unit % ctx.modulus})")

y = PadicNum.from_rational(Fraction(9, 2), ctx)
print(f"9/2: {y}  -> valuation carries the 3^2, the unit is 1/2 mod 3^6")

print(f"product: {x * y}")
print(f"inverse of 9/2: {y.inv()}  (negative valuation)")

# cancellation: (1 + 3^4) - 1 keeps only two trustworthy digits
a = PadicNum.from_int(1 + 3 ** 4, ctx)
d = a - PadicNum.one(ctx)
print(f"(1 + 3^4) - 1 = {d}, effective precision {d.effective_precision}")

print("congruent mod 3^2?", congruent_mod(d, PadicNum(ctx, 4, 1), 2 + 4))
try:
    congruent_mod(d, PadicNum(ctx, 4, 1), 8)
except PrecisionError as exc:
    print("asking beyond the known digits raises:", exc)

# exact zero: infinite valuation, not a zero unit
z = x - x
print(f"x - x: {z} (valuation {z.valuation})")

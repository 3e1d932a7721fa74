"""Rising factorials, p-factor extraction, and their gamma-quotient identities.

The key structural fact: (x)_n factors as (-1)^n * f * Gamma_p(x+n)/Gamma_p(x),
where f collects exactly those factors x+j divisible by p.  Iterating that
factorization across prime-power truncation lengths yields the closed-form
"descent" ratios checked here, used by the congruence engine's right sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceededError, DomainError
from .gamma import gamma_rational
from .padic import PadicContext, PadicNum, congruent_mod, valuation_rat

#: Largest p^r accepted by the descent checks (exact evaluation stays desk-scale).
DEFAULT_CAP = 10 ** 7


def rising_exact(x, n: int) -> Fraction:
    """(x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1."""
    if n < 0:
        raise DomainError(f"rising factorial length must be >= 0, got {n}")
    x = Fraction(x)
    acc = Fraction(1)
    for j in range(n):
        acc *= x + j
    return acc


@dataclass(frozen=True)
class PochValue:
    """A rising factorial split into its p-divisible and p-free factor products."""

    base: Fraction
    length: int
    exact: Fraction
    p_part: Fraction
    unit_part: Fraction


def p_factor_split(x, n: int, p: int) -> PochValue:
    """Split (x)_n into p_part (factors with nu_p > 0) times unit_part."""
    x = Fraction(x)
    if valuation_rat(x, p) < 0:
        raise DomainError(f"{x} is not a p-adic integer for p = {p}")
    p_part = Fraction(1)
    unit_part = Fraction(1)
    for j in range(n):
        f = x + j
        if valuation_rat(f, p) > 0:
            p_part *= f
        else:
            unit_part *= f
    return PochValue(x, n, p_part * unit_part, p_part, unit_part)


def _ratio_is_one(lhs: PadicNum, rhs: PadicNum, t: int) -> bool:
    """lhs == rhs as p-adic numbers to t digits, compared through their ratio.

    Comparing lhs/rhs to 1 checks the valuations *and* t unit digits even when
    the common valuation exceeds t, where a plain difference mod p^t would be
    vacuous.
    """
    if lhs.is_zero or rhs.is_zero:
        return lhs.is_zero and rhs.is_zero
    ratio = lhs / rhs
    if ratio.valuation != 0:
        return False
    return congruent_mod(ratio, PadicNum.one(lhs.ctx), t)


def check_gamma_factorization(x, n: int, ctx: PadicContext) -> bool:
    """Verify (x)_n == (-1)^n * f_p[(x)_n] * Gamma_p(x+n)/Gamma_p(x) mod p^M."""
    x = Fraction(x)
    split = p_factor_split(x, n, ctx.p)
    lhs = PadicNum.from_rational(split.exact, ctx)
    if split.p_part == 0 or split.unit_part == 0:
        return lhs.is_zero
    rhs = PadicNum.from_rational((-1) ** (n % 2) * split.p_part, ctx)
    rhs = rhs * gamma_rational(x + n, ctx) / gamma_rational(x, ctx)
    return _ratio_is_one(lhs, rhs, ctx.precision)


def _descent_precheck(p: int, r: int, cap: int):
    if p % 4 != 3:
        raise DomainError(f"descent identities require p = 3 mod 4, got p = {p}")
    if r <= 1 or r % 2 == 0:
        raise DomainError(f"descent identities require odd r > 1, got r = {r}")
    if p ** r > cap:
        raise CapExceededError(f"p^r = {p ** r} exceeds the cap {cap}")


def _descent_rhs(ctx: PadicContext, v_shift: int, sign_exponent: int,
                 gamma_num, gamma_den, rational_factors) -> PadicNum:
    # the explicit p-power stays a valuation shift; only units are multiplied
    rhs = PadicNum(ctx, v_shift, 1)
    if sign_exponent % 2:
        rhs = -rhs
    for arg in gamma_num:
        rhs = rhs * gamma_rational(arg, ctx)
    for arg in gamma_den:
        rhs = rhs / gamma_rational(arg, ctx)
    for f in rational_factors:
        rhs = rhs * PadicNum.from_rational(f, ctx)
    return rhs


def check_descent(variant: str, p: int, r: int, ctx: PadicContext,
                  cap: int = DEFAULT_CAP) -> bool:
    """Check one closed-form ratio (x)_{N(r)} / (x)_{N(r-2)} against gammas.

    variant 'a': x = 1/4 at double length N(r) = (p^r - 3)/2,
    variant 'b': x = 1   at length (p^r - 3)/4,
    variant 'c': x = 1/4 at length (p^r - 3)/4.
    """
    _descent_precheck(p, r, cap)
    q1, q2 = Fraction(p) ** r, Fraction(p) ** (r - 1)
    q3 = Fraction(p) ** (r - 2)
    if variant == "a":
        n1, n2 = (p ** r - 3) // 2, (p ** (r - 2) - 3) // 2
        lhs = rising_exact(Fraction(1, 4), n1) / rising_exact(Fraction(1, 4), n2)
        rhs = _descent_rhs(
            ctx,
            (p ** (r - 1) + p ** (r - 2)) // 2,
            (p ** r + p ** (r - 1) - 4) // 2,
            [q1 / 2 - Fraction(5, 4), q2 / 2 + Fraction(1, 4)],
            [Fraction(1, 4), Fraction(3, 4)],
            [q3 / 2 - Fraction(5, 4), q3 / 2 - Fraction(1, 4)],
        )
    elif variant == "b":
        n1, n2 = (p ** r - 3) // 4, (p ** (r - 2) - 3) // 4
        lhs = rising_exact(Fraction(1), n1) / rising_exact(Fraction(1), n2)
        rhs = _descent_rhs(
            ctx,
            (p ** (r - 1) + p ** (r - 2) - 4) // 4,
            (p ** r + p ** (r - 1) - 4) // 4,
            [(q1 + 1) / 4, (q2 + 3) / 4],
            [],
            [],
        )
    elif variant == "c":
        n1, n2 = (p ** r - 3) // 4, (p ** (r - 2) - 3) // 4
        lhs = rising_exact(Fraction(1, 4), n1) / rising_exact(Fraction(1, 4), n2)
        # inner gamma argument is p^{r-1}/4 + 1/2: the /4 scale is forced by
        # the factorization (exact check fails with p^{r-1}/2 there)
        rhs = _descent_rhs(
            ctx,
            (p ** (r - 1) + p ** (r - 2)) // 4,
            (p ** r + p ** (r - 1) - 4) // 4,
            [q1 / 4 - Fraction(1, 2), q2 / 4 + Fraction(1, 2)],
            [Fraction(1, 4), Fraction(3, 4)],
            [q3 / 4 - Fraction(1, 2)],
        )
    else:
        raise DomainError(f"unknown descent variant {variant!r}")
    return _ratio_is_one(PadicNum.from_rational(lhs, ctx), rhs, ctx.precision)


def check_half_descent(p: int, r: int, ctx: PadicContext,
                       cap: int = DEFAULT_CAP) -> bool:
    """Check the (1/2)_{(p^r-3)/4} / (1/2)_{(p^{r-2}-3)/4} closed form."""
    _descent_precheck(p, r, cap)
    q1, q2, q3 = Fraction(p) ** r, Fraction(p) ** (r - 1), Fraction(p) ** (r - 2)
    n1, n2 = (p ** r - 3) // 4, (p ** (r - 2) - 3) // 4
    lhs = rising_exact(Fraction(1, 2), n1) / rising_exact(Fraction(1, 2), n2)
    rhs = _descent_rhs(
        ctx,
        (p ** (r - 1) + p ** (r - 2)) // 4,
        (p ** r + p ** (r - 1) - 4) // 4,
        [q1 / 4 - Fraction(1, 4), q2 / 4 + Fraction(1, 4)],
        [Fraction(1, 2), Fraction(1, 2)],
        [q3 / 4 - Fraction(1, 4)],
    )
    return _ratio_is_one(PadicNum.from_rational(lhs, ctx), rhs, ctx.precision)


def product_identity(m: int):
    """Both sides of prod_{k=1}^{m} (4k-2)/(4k-3) == (1/2)_m / (1/4)_m."""
    prod = Fraction(1)
    for k in range(1, m + 1):
        prod *= Fraction(4 * k - 2, 4 * k - 3)
    return prod, rising_exact(Fraction(1, 2), m) / rising_exact(Fraction(1, 4), m)

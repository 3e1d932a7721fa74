"""Morita's p-adic gamma function on Z_p-rational arguments.

Gamma_p(n) = (-1)^n * prod of j < n coprime to p; the extension to x in Z_p
evaluates at the integer representative of x modulo p^digits, which is exact
to that many digits because Gamma_p is 1-Lipschitz on Z_p.  Evaluations cost
Theta(p^digits) modular multiplications, so computed residues are memoized
per (prime, digits, argument).
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import DomainError
from .padic import PadicContext, PadicNum, congruent_mod, valuation_rat

_memo: dict = {}
_memo_lock = threading.Lock()


def clear_cache():
    with _memo_lock:
        _memo.clear()


def _gamma_residue(n: int, p: int, mod: int) -> int:
    """Gamma_p(n) mod `mod` for an integer n >= 0, by the defining product."""
    acc = 1
    for j in range(1, n):
        if j % p:
            acc = acc * j % mod
    return -acc % mod if n % 2 else acc % mod


def gamma_int(n: int, ctx: PadicContext) -> PadicNum:
    """Gamma_p at a nonnegative integer, exact mod p^M."""
    if n < 0:
        raise DomainError(f"gamma_int requires n >= 0, got {n}")
    if n == 0:
        return PadicNum.one(ctx)
    return PadicNum(ctx, 0, _gamma_residue(n, ctx.p, ctx.modulus))


def gamma_rational(x, ctx: PadicContext, digits: int = None) -> PadicNum:
    """Gamma_p at a rational x in Z_p, correct mod p^digits (default: full M).

    The result is always a p-adic unit and carries effective precision
    `digits`, so downstream congruence checks cannot overdraw it.
    """
    x = Fraction(x)
    if valuation_rat(x, ctx.p) < 0:
        raise DomainError(f"{x} is not a p-adic integer for p = {ctx.p}")
    if digits is None:
        digits = ctx.precision
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")
    key = (ctx.p, digits, x)
    with _memo_lock:
        res = _memo.get(key)
    if res is None:
        mod = ctx.p ** digits
        a = x.numerator * pow(x.denominator, -1, mod) % mod
        # representative in [1, p^digits]; 0 maps to p^digits so the product
        # definition near 0 is used rather than the empty convention
        n = a if a >= 1 else mod
        res = _gamma_residue(n, ctx.p, mod)
        with _memo_lock:
            _memo[key] = res
    return PadicNum(ctx, 0, res, abs_prec=digits)


def rep_mod_p(x, p: int) -> int:
    """The representative of x mod p in {1, ..., p} (p itself stands for 0)."""
    x = Fraction(x)
    if valuation_rat(x, p) < 0:
        raise DomainError(f"{x} is not a p-adic integer for p = {p}")
    c = x.numerator * pow(x.denominator, -1, p) % p
    return c if c else p


def check_reflection(x, ctx: PadicContext) -> bool:
    """Gamma_p(x) * Gamma_p(1-x) == (-1)^rep_mod_p(x), checked mod p^M."""
    x = Fraction(x)
    lhs = gamma_rational(x, ctx) * gamma_rational(1 - x, ctx)
    rhs = PadicNum.from_int((-1) ** (rep_mod_p(x, ctx.p) % 2), ctx)
    return congruent_mod(lhs, rhs, ctx.precision)


def check_ratio(x, ctx: PadicContext) -> bool:
    """Gamma_p(x+1)/Gamma_p(x) == -x when nu_p(x) = 0, else -1; mod p^M."""
    x = Fraction(x)
    ratio = gamma_rational(x + 1, ctx) / gamma_rational(x, ctx)
    if valuation_rat(x, ctx.p) == 0:
        expected = PadicNum.from_rational(-x, ctx)
    else:
        expected = PadicNum.from_int(-1, ctx)
    return congruent_mod(ratio, expected, ctx.precision)

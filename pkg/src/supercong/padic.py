"""Fixed-precision p-adic arithmetic on (valuation, unit) pairs.

A value is stored as p^valuation * unit with the unit coprime to p.  Exact
zero carries an infinite valuation.  Every number also remembers its absolute
precision: the exponent a such that the value is known modulo p^a.  Addition
with cancellation lowers that bound instead of silently inventing digits, and
``congruent_mod`` refuses to certify a congruence deeper than what is known.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ContextMismatchError, DomainError, PrecisionError

#: Valuation of an exact zero.
INFINITE = float("inf")

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MAX_PRIME = 1 << 64


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every n < 3.3e24 (covers 64-bit)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def valuation_int(n: int, p: int):
    """nu_p(n) for an integer; INFINITE when n = 0."""
    if n == 0:
        return INFINITE
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation_rat(q: Fraction, p: int):
    """nu_p of a rational: nu_p(numerator) - nu_p(denominator); INFINITE at 0."""
    if q == 0:
        return INFINITE
    return valuation_int(q.numerator, p) - valuation_int(q.denominator, p)


@dataclass(frozen=True)
class PadicContext:
    """An odd prime p together with a working precision of M significant digits."""

    p: int
    precision: int
    modulus: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0:
            raise DomainError(f"p must be an odd prime >= 3, got {self.p}")
        if self.p >= _MAX_PRIME:
            raise DomainError(f"p = {self.p} exceeds the supported 64-bit range")
        if not is_prime(self.p):
            raise DomainError(f"p = {self.p} is not prime")
        if self.precision < 1:
            raise DomainError(f"precision must be >= 1, got {self.precision}")
        object.__setattr__(self, "modulus", self.p ** self.precision)

    def __repr__(self):
        return f"PadicContext(p={self.p}, precision={self.precision})"


class PadicNum:
    """Immutable p-adic number: p^valuation * unit, known mod p^abs_prec."""

    __slots__ = ("ctx", "valuation", "unit", "abs_prec")

    def __init__(self, ctx: PadicContext, valuation, unit, abs_prec=None):
        self.ctx = ctx
        if valuation == INFINITE:
            self.valuation = INFINITE
            self.unit = None
            self.abs_prec = INFINITE if abs_prec is None else abs_prec
            return
        if abs_prec is None:
            abs_prec = valuation + ctx.precision
        eff = abs_prec - valuation
        if eff < 1:
            raise PrecisionError(
                f"no significant digits left (valuation {valuation}, "
                f"absolute precision {abs_prec})"
            )
        eff = min(eff, ctx.precision)
        u = unit % ctx.p ** eff
        if u % ctx.p == 0:
            raise DomainError(f"unit {unit} is divisible by p = {ctx.p}")
        self.valuation = valuation
        self.unit = u
        self.abs_prec = valuation + eff

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ctx: PadicContext, abs_prec=None) -> "PadicNum":
        return cls(ctx, INFINITE, None, abs_prec)

    @classmethod
    def one(cls, ctx: PadicContext) -> "PadicNum":
        return cls(ctx, 0, 1)

    @classmethod
    def from_rational(cls, q, ctx: PadicContext) -> "PadicNum":
        """Embed an exact rational: valuation extracted, p-free part inverted mod p^M."""
        q = Fraction(q)
        if q == 0:
            return cls.zero(ctx)
        num, den = q.numerator, q.denominator
        vn = valuation_int(num, ctx.p)
        vd = valuation_int(den, ctx.p)
        num //= ctx.p ** vn
        den //= ctx.p ** vd
        mod = ctx.modulus
        unit = num * pow(den, -1, mod) % mod
        return cls(ctx, vn - vd, unit)

    @classmethod
    def from_int(cls, n: int, ctx: PadicContext) -> "PadicNum":
        return cls.from_rational(Fraction(n), ctx)

    # -- helpers ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.valuation == INFINITE

    @property
    def effective_precision(self):
        """Significant digits of the unit that are guaranteed correct."""
        if self.is_zero:
            return self.abs_prec
        return self.abs_prec - self.valuation

    def _require_same_context(self, other: "PadicNum"):
        if self.ctx != other.ctx:
            raise ContextMismatchError(
                f"cannot combine values from {self.ctx} and {other.ctx}"
            )

    def truncate_to(self, ctx: PadicContext) -> "PadicNum":
        """Reinterpret in a lower-precision context with the same prime."""
        if ctx.p != self.ctx.p:
            raise ContextMismatchError("truncation must preserve the prime")
        if self.is_zero:
            return PadicNum.zero(ctx, self.abs_prec)
        return PadicNum(ctx, self.valuation, self.unit,
                        min(self.abs_prec, self.valuation + ctx.precision))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "PadicNum") -> "PadicNum":
        self._require_same_context(other)
        if self.is_zero or other.is_zero:
            abs_prec = min(self.abs_prec, other.abs_prec)
            value = other if self.is_zero else self
            if value.is_zero or value.valuation >= abs_prec:
                # nothing visible within the digits known to be zero
                return PadicNum.zero(self.ctx, abs_prec)
            return PadicNum(self.ctx, value.valuation, value.unit, abs_prec)
        a, b = (self, other) if self.valuation <= other.valuation else (other, self)
        v = a.valuation
        abs_prec = min(a.abs_prec, b.abs_prec)
        digits = abs_prec - v
        mod = self.ctx.p ** digits
        s = (a.unit + b.unit * self.ctx.p ** (b.valuation - v)) % mod
        if s == 0:
            return PadicNum.zero(self.ctx, abs_prec)
        dv = valuation_int(s, self.ctx.p)
        return PadicNum(self.ctx, v + dv, s // self.ctx.p ** dv, abs_prec)

    def __neg__(self) -> "PadicNum":
        if self.is_zero:
            return self
        return PadicNum(self.ctx, self.valuation, -self.unit, self.abs_prec)

    def __sub__(self, other: "PadicNum") -> "PadicNum":
        return self + (-other)

    def __mul__(self, other: "PadicNum") -> "PadicNum":
        self._require_same_context(other)
        if self.is_zero or other.is_zero:
            if self.is_zero and other.is_zero:
                abs_prec = self.abs_prec + other.abs_prec
            elif self.is_zero:
                abs_prec = self.abs_prec + other.valuation
            else:
                abs_prec = other.abs_prec + self.valuation
            return PadicNum.zero(self.ctx, abs_prec)
        eff = min(self.effective_precision, other.effective_precision)
        v = self.valuation + other.valuation
        return PadicNum(self.ctx, v, self.unit * other.unit, v + eff)

    def inv(self) -> "PadicNum":
        if self.is_zero:
            raise DomainError("cannot invert zero")
        eff = self.effective_precision
        u = pow(self.unit, -1, self.ctx.p ** eff)
        return PadicNum(self.ctx, -self.valuation, u, -self.valuation + eff)

    def __truediv__(self, other: "PadicNum") -> "PadicNum":
        return self * other.inv()

    def __pow__(self, e: int) -> "PadicNum":
        if self.is_zero:
            if e > 0:
                return self
            if e == 0:
                return PadicNum.one(self.ctx)
            raise DomainError("cannot raise zero to a negative power")
        if e == 0:
            return PadicNum.one(self.ctx)
        base = self.inv() if e < 0 else self
        e = abs(e)
        eff = base.effective_precision
        u = pow(base.unit, e, self.ctx.p ** eff)
        v = base.valuation * e
        return PadicNum(self.ctx, v, u, v + eff)

    # -- comparisons and rendering ------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PadicNum):
            return NotImplemented
        return (self.ctx == other.ctx and self.valuation == other.valuation
                and self.unit == other.unit and self.abs_prec == other.abs_prec)

    def __hash__(self):
        return hash((self.ctx, self.valuation, self.unit, self.abs_prec))

    def residue(self, t: int) -> int:
        """Integer representative of the value mod p^t (requires valuation >= 0)."""
        if t > self.abs_prec:
            raise PrecisionError(f"residue mod p^{t} exceeds precision {self.abs_prec}")
        if self.is_zero:
            return 0
        if self.valuation < 0:
            raise DomainError("residue undefined for negative valuation")
        mod = self.ctx.p ** t
        return self.unit * self.ctx.p ** min(self.valuation, t) % mod

    def __str__(self):
        if self.is_zero:
            return "0"
        return f"{self.ctx.p}^{self.valuation} * {self.unit}"

    def __repr__(self):
        return (f"PadicNum(p={self.ctx.p}, v={self.valuation}, u={self.unit}, "
                f"known mod p^{self.abs_prec})")


def congruent_mod(a: PadicNum, b: PadicNum, t: int) -> bool:
    """True iff nu_p(a - b) >= t; error when either side is not known mod p^t."""
    a._require_same_context(b)
    if t > a.abs_prec or t > b.abs_prec:
        raise PrecisionError(
            f"congruence mod p^{t} requested, but operands are known only mod "
            f"p^{min(a.abs_prec, b.abs_prec)}"
        )
    d = a - b
    return d.valuation >= t


def excess_valuation(a: PadicNum, b: PadicNum, t: int) -> int:
    """nu_p(a - b) - t, capped at the provable bound when a - b vanishes."""
    d = a - b
    v = d.abs_prec if d.is_zero else d.valuation
    if v == INFINITE:
        v = t  # exact-zero difference: 0 is the provable floor
    return int(v - t)

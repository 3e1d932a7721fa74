"""Bivariate polynomials over Q and reduced rational functions in (n, k).

Polynomials are kept as monomial maps (degrees here never exceed ~10).
Rational functions normalize at construction: numerator and denominator are
divided by their gcd (primitive pseudo-remainder sequence in (Q[k])[n]) and
scaled so the denominator's lexicographically leading coefficient is 1, which
makes structural equality canonical.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError

# ---------------------------------------------------------------------------
# univariate helpers over Q, coefficient lists low -> high
# ---------------------------------------------------------------------------


def _u_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _u_add(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _u_trim(out)


def _u_scale(a, s):
    if s == 0:
        return []
    return [x * s for x in a]


def _u_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _u_trim(out)


def _u_divmod(a, b):
    if not b:
        raise ZeroDivisionError("univariate division by zero polynomial")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b):
        c = a[-1] * inv_lead
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] -= c * y
        _u_trim(a)
        if not a:
            break
    return _u_trim(q), a


def _u_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _u_divmod(a, b)[1]
    if a:
        a = _u_scale(a, 1 / a[-1])
    return a


class BivarPoly:
    """Polynomial in (n, k) with rational coefficients, monomial-map storage."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cleaned = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                c = Fraction(c)
                if c:
                    cleaned[(i, j)] = c
        self.coeffs = cleaned

    # -- construction ---------------------------------------------------

    @classmethod
    def const(cls, c) -> "BivarPoly":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def linear(cls, coef_n, coef_k, constant) -> "BivarPoly":
        return cls({(1, 0): Fraction(coef_n), (0, 1): Fraction(coef_k),
                    (0, 0): Fraction(constant)})

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self.coeffs)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise DomainError("polynomial is not constant")
        return self.coeffs.get((0, 0), Fraction(0))

    def total_degree(self) -> int:
        return max((i + j for (i, j) in self.coeffs), default=0)

    def lead_coeff(self) -> Fraction:
        """Coefficient of the lexicographically largest monomial (n before k)."""
        if self.is_zero:
            return Fraction(0)
        return self.coeffs[max(self.coeffs)]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, Fraction(0)) + c
        return BivarPoly(out)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        return self + (-other)

    def __mul__(self, other: "BivarPoly") -> "BivarPoly":
        out = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return BivarPoly(out)

    def scale(self, s) -> "BivarPoly":
        s = Fraction(s)
        return BivarPoly({m: c * s for m, c in self.coeffs.items()})

    def __pow__(self, e: int) -> "BivarPoly":
        if e < 0:
            raise DomainError("negative power of a polynomial")
        out = BivarPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, dn: int, dk: int) -> "BivarPoly":
        """Substitute n -> n + dn, k -> k + dk."""
        n_plus = BivarPoly.linear(1, 0, dn)
        k_plus = BivarPoly.linear(0, 1, dk)
        out = BivarPoly()
        for (i, j), c in self.coeffs.items():
            out = out + (n_plus ** i * k_plus ** j).scale(c)
        return out

    def eval(self, n, k) -> Fraction:
        n, k = Fraction(n), Fraction(k)
        return sum((c * n ** i * k ** j for (i, j), c in self.coeffs.items()),
                   Fraction(0))

    # -- comparison / rendering ---------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for (i, j) in sorted(self.coeffs, reverse=True):
            c = self.coeffs[(i, j)]
            pieces = []
            if i:
                pieces.append(f"n^{i}" if i > 1 else "n")
            if j:
                pieces.append(f"k^{j}" if j > 1 else "k")
            mono = "*".join(pieces)
            if mono:
                txt = mono if c == 1 else (f"-{mono}" if c == -1 else f"{c}*{mono}")
            else:
                txt = str(c)
            parts.append(txt)
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    __repr__ = __str__

    # -- recursive representation for gcd -------------------------------------

    def _to_rec(self):
        """List over n-degree of univariate-in-k coefficient lists."""
        if self.is_zero:
            return []
        deg_n = max(i for (i, j) in self.coeffs)
        rec = [[] for _ in range(deg_n + 1)]
        for (i, j), c in self.coeffs.items():
            row = rec[i]
            while len(row) <= j:
                row.append(Fraction(0))
            row[j] = c
        for row in rec:
            _u_trim(row)
        while rec and not rec[-1]:
            rec.pop()
        return rec

    @classmethod
    def _from_rec(cls, rec) -> "BivarPoly":
        out = {}
        for i, row in enumerate(rec):
            for j, c in enumerate(row):
                if c:
                    out[(i, j)] = c
        return cls(out)


def _rec_content(rec):
    g = []
    for row in rec:
        if row:
            g = _u_gcd(g, row)
    return g


def _rec_primitive(rec):
    cont = _rec_content(rec)
    if not cont:
        return [], []
    pp = [(_u_divmod(row, cont)[0] if row else []) for row in rec]
    return pp, cont


def _rec_prem(a, b):
    """Pseudo-remainder of a by b in (Q[k])[n]."""
    a = [list(r) for r in a]
    lb = b[-1]
    while len(a) >= len(b) and a:
        la = a[-1]
        d = len(a) - len(b)
        # a := lb*a - la * n^d * b
        a = [_u_mul(r, lb) for r in a]
        for i, rb in enumerate(b):
            a[d + i] = _u_add(a[d + i], _u_scale(_u_mul(rb, la), -1))
        while a and not a[-1]:
            a.pop()
    return a


def poly_gcd(A: BivarPoly, B: BivarPoly) -> BivarPoly:
    """gcd in Q[n, k], normalized to lex-leading coefficient 1."""
    if A.is_zero and B.is_zero:
        return BivarPoly()
    if A.is_zero or B.is_zero:
        g = B if A.is_zero else A
        return g.scale(1 / g.lead_coeff())
    ra, ca = _rec_primitive(A._to_rec())
    rb, cb = _rec_primitive(B._to_rec())
    g_cont = _u_gcd(ca, cb)
    while rb:
        r = _rec_prem(ra, rb)
        ra, rb = rb, _rec_primitive(r)[0]
    gp = BivarPoly._from_rec([_u_mul(row, g_cont) if row else [] for row in ra])
    return gp.scale(1 / gp.lead_coeff())


def poly_exact_div(A: BivarPoly, G: BivarPoly) -> BivarPoly:
    """A / G when G divides A exactly; raises otherwise."""
    if G.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if A.is_zero:
        return BivarPoly()
    a = A._to_rec()
    g = G._to_rec()
    q = [[] for _ in range(len(a) - len(g) + 1)]
    while a and len(a) >= len(g):
        qc, rem = _u_divmod(a[-1], g[-1])
        if rem:
            raise DomainError("inexact polynomial division")
        d = len(a) - len(g)
        q[d] = qc
        for i, rg in enumerate(g):
            a[d + i] = _u_add(a[d + i], _u_scale(_u_mul(rg, qc), -1))
        while a and not a[-1]:
            a.pop()
    if a:
        raise DomainError("inexact polynomial division")
    return BivarPoly._from_rec(q)


class RationalFunction:
    """Quotient of bivariate polynomials, reduced and canonically scaled."""

    __slots__ = ("num", "den")

    def __init__(self, num: BivarPoly, den: BivarPoly):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num = BivarPoly()
            self.den = BivarPoly.const(1)
            return
        g = poly_gcd(num, den)
        num = poly_exact_div(num, g)
        den = poly_exact_div(den, g)
        s = 1 / den.lead_coeff()
        self.num = num.scale(s)
        self.den = den.scale(s)

    @classmethod
    def from_poly(cls, p: BivarPoly) -> "RationalFunction":
        return cls(p, BivarPoly.const(1))

    @classmethod
    def const(cls, c) -> "RationalFunction":
        return cls(BivarPoly.const(c), BivarPoly.const(1))

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls.const(1)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, e: int) -> "RationalFunction":
        if e < 0:
            return RationalFunction(self.den ** (-e), self.num ** (-e))
        return RationalFunction(self.num ** e, self.den ** e)

    def eval(self, n, k) -> Fraction:
        d = self.den.eval(n, k)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at ({n}, {k})")
        return self.num.eval(n, k) / d

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == BivarPoly.const(1):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__

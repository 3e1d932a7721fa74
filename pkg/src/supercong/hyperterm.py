"""A small DSL for proper-hypergeometric terms in two integer indices (n, k).

A term is sign * scalar * polynomial * product of poch(param, linear-arg)^e
factors.  Exact evaluation extends rising factorials to negative lengths by
the reciprocal rule (a)_{-j} = 1 / ((a-1)(a-2)...(a-j)); a denominator factor
whose extension blows up makes the whole term vanish (the usual telescoping
boundary convention), while a numerator factor doing so is a hard error.

Shift quotients t(n+dn, k+dk) / t(n, k) are rational functions obtained from
poch(a, L+c) / poch(a, L) = prod_{j=0}^{c-1} (a + L + j), and certificates
p(k) F(n,k-1) - q(k) F(n,k) = G(n+1,k) - G(n,k) are verified both symbolically
(clearing denominators) and on exact-rational grids.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, NonSimilarTermsError, ParseError
from .pochhammer import rising_exact
from .polynomials import BivarPoly, RationalFunction

_MAX_SHIFT = 4


@dataclass(frozen=True)
class LinearForm:
    """coef_n * n + coef_k * k + constant with integer coefficients."""

    coef_n: int = 0
    coef_k: int = 0
    constant: int = 0

    def eval(self, n: int, k: int) -> int:
        return self.coef_n * n + self.coef_k * k + self.constant

    def delta(self, dn: int, dk: int) -> int:
        """By how much the value moves under (n, k) -> (n+dn, k+dk)."""
        return self.coef_n * dn + self.coef_k * dk

    def shift(self, dn: int, dk: int) -> "LinearForm":
        return LinearForm(self.coef_n, self.coef_k, self.constant + self.delta(dn, dk))

    def to_poly(self) -> BivarPoly:
        return BivarPoly.linear(self.coef_n, self.coef_k, self.constant)

    @property
    def is_constant(self) -> bool:
        return self.coef_n == 0 and self.coef_k == 0

    def __str__(self):
        parts = []
        for coef, name in ((self.coef_n, "n"), (self.coef_k, "k")):
            if coef == 0:
                continue
            if coef == 1:
                txt = name
            elif coef == -1:
                txt = f"-{name}"
            else:
                txt = f"{coef}*{name}"
            parts.append(txt)
        if self.constant or not parts:
            parts.append(str(self.constant))
        out = parts[0]
        for t in parts[1:]:
            out += t if t.startswith("-") else f"+{t}"
        return out


@dataclass(frozen=True)
class PochFactor:
    param: Fraction
    arg: LinearForm
    exponent: int


class HyperTerm:
    """Normalized proper-hypergeometric term."""

    __slots__ = ("sign_exponent", "poly_prefactor", "scalar", "factors")

    def __init__(self, sign_exponent: LinearForm = LinearForm(),
                 poly_prefactor: BivarPoly = None, scalar=1, factors=()):
        scalar = Fraction(scalar)
        poly = poly_prefactor if poly_prefactor is not None else BivarPoly.const(1)
        if poly.is_zero:
            raise DomainError("polynomial prefactor must not be identically zero")
        if poly.is_constant:  # constants live in the scalar, canonically
            scalar *= poly.constant_value()
            poly = BivarPoly.const(1)
        # constant-argument factors are plain rationals: fold them away
        merged: dict = {}
        for f in factors:
            if f.exponent == 0:
                continue
            if f.arg.is_constant:
                scalar *= _const_poch_power(f.param, f.arg.constant, f.exponent)
                continue
            key = (f.param, f.arg)
            merged[key] = merged.get(key, 0) + f.exponent
        if scalar == 0:
            raise DomainError("term is identically zero")
        if sign_exponent.constant % 2:
            scalar = -scalar  # constant part of (-1)^lin folds into the scalar
        self.scalar = scalar
        self.poly_prefactor = poly
        self.sign_exponent = LinearForm(sign_exponent.coef_n % 2,
                                        sign_exponent.coef_k % 2, 0)
        self.factors = tuple(
            PochFactor(param, arg, e)
            for (param, arg), e in sorted(
                merged.items(),
                key=lambda it: (it[0][0], it[0][1].coef_n, it[0][1].coef_k,
                                it[0][1].constant))
            if e != 0
        )

    # -- evaluation -----------------------------------------------------------

    def eval(self, n: int, k: int) -> Fraction:
        """Exact value at integer (n, k), with the vanishing convention."""
        contributions = []
        for f in self.factors:
            m = f.arg.eval(n, k)
            contributions.append(_poch_power(f.param, m, f.exponent))
        total = self.scalar * self.poly_prefactor.eval(n, k)
        if self.sign_exponent.eval(n, k) % 2:
            total = -total
        for c in contributions:
            total *= c
        return total

    # -- structural operations --------------------------------------------------

    def shifted(self, dn: int, dk: int) -> "HyperTerm":
        return HyperTerm(
            LinearForm(self.sign_exponent.coef_n, self.sign_exponent.coef_k,
                       self.sign_exponent.constant
                       + self.sign_exponent.delta(dn, dk)),
            self.poly_prefactor.shift(dn, dk),
            self.scalar,
            [PochFactor(f.param, f.arg.shift(dn, dk), f.exponent)
             for f in self.factors],
        )

    def reciprocal(self) -> "HyperTerm":
        return HyperTerm(self.sign_exponent, _invert_poly(self.poly_prefactor),
                         1 / self.scalar,
                         [PochFactor(f.param, f.arg, -f.exponent)
                          for f in self.factors])

    def __mul__(self, other: "HyperTerm") -> "HyperTerm":
        s = self.sign_exponent
        o = other.sign_exponent
        return HyperTerm(
            LinearForm(s.coef_n + o.coef_n, s.coef_k + o.coef_k,
                       s.constant + o.constant),
            self.poly_prefactor * other.poly_prefactor,
            self.scalar * other.scalar,
            self.factors + other.factors,
        )

    def __eq__(self, other):
        if not isinstance(other, HyperTerm):
            return NotImplemented
        return (self.sign_exponent == other.sign_exponent
                and self.poly_prefactor == other.poly_prefactor
                and self.scalar == other.scalar
                and self.factors == other.factors)

    def __hash__(self):
        return hash((self.sign_exponent, self.poly_prefactor, self.scalar,
                     self.factors))

    # -- rendering ---------------------------------------------------------------

    def __str__(self):
        return pretty(self)

    __repr__ = __str__


def _invert_poly(poly: BivarPoly) -> BivarPoly:
    if not poly.is_constant:
        raise DomainError("cannot divide by a non-constant polynomial prefactor")
    return BivarPoly.const(1 / poly.constant_value())


def _const_poch_power(param: Fraction, m: int, exponent: int) -> Fraction:
    """poch(param, m)^exponent for a constant length m (must be finite, nonzero)."""
    value = _poch_power(param, m, exponent)
    if value == 0:
        raise DomainError(
            f"constant factor poch({param},{m})^{exponent} makes the term "
            "identically zero")
    return value


def _poch_power(a: Fraction, m: int, e: int) -> Fraction:
    """(a)_m ** e with the negative-length reciprocal extension.

    Vanishing: a zero product hit with e < 0 contributes 0 (term vanishes);
    hit with e > 0 the value is 1/0 and the term is undefined.
    """
    if m >= 0:
        base = rising_exact(a, m)
        if e >= 0:
            return base ** e
        if base == 0:
            raise DomainError(
                f"reciprocal of the zero Pochhammer ({a})_{m} is undefined")
        return base ** e
    # (a)_m = 1 / ((a-1)(a-2)...(a+m)) for m < 0
    z = Fraction(1)
    for i in range(1, -m + 1):
        z *= a - i
    if z == 0:
        if e > 0:
            raise DomainError(
                f"({a})_{m} has no finite value (zero in the reciprocal product)")
        return Fraction(0)
    return z ** (-e)


# ---------------------------------------------------------------------------
# shift and cross ratios
# ---------------------------------------------------------------------------


def _check_shift(dn: int, dk: int):
    if abs(dn) > _MAX_SHIFT or abs(dk) > _MAX_SHIFT:
        raise DomainError(f"shifts are limited to |d| <= {_MAX_SHIFT}")


def _poch_shift_poly(param: Fraction, base_arg: LinearForm, c: int):
    """poch(param, base+c) / poch(param, base) as (numerator, denominator) polys."""
    num = BivarPoly.const(1)
    den = BivarPoly.const(1)
    base = base_arg.to_poly()
    if c >= 0:
        for j in range(c):
            num = num * (base + BivarPoly.const(param + j))
    else:
        for j in range(1, -c + 1):
            den = den * (base + BivarPoly.const(param - j))
    return num, den


def cross_ratio(a: HyperTerm, b: HyperTerm, dn: int, dk: int) -> RationalFunction:
    """a(n+dn, k+dk) / b(n, k) as a canonical rational function.

    Requires the two terms to share a Pochhammer skeleton up to integer
    argument shifts; otherwise the quotient is not rational and a structured
    error is raised.
    """
    _check_shift(dn, dk)
    a = a.shifted(dn, dk)
    sa, sb = a.sign_exponent, b.sign_exponent
    if (sa.coef_n - sb.coef_n) % 2 or (sa.coef_k - sb.coef_k) % 2:
        raise NonSimilarTermsError(
            "sign exponents differ by a non-constant form; ratio is not rational")
    sign = -1 if (sa.constant - sb.constant) % 2 else 1

    groups: dict = {}
    for side, term in ((1, a), (-1, b)):
        for f in term.factors:
            key = (f.param, f.arg.coef_n, f.arg.coef_k)
            groups.setdefault(key, []).append((side, f.arg, f.exponent))

    num = BivarPoly.const(Fraction(sign) * a.scalar / b.scalar)
    den = BivarPoly.const(1)
    for (param, cn, ck), entries in groups.items():
        anchor = min(arg.constant for _, arg, _ in entries)
        base = LinearForm(cn, ck, anchor)
        net = 0
        for side, arg, e in entries:
            net += side * e
            pn, pd = _poch_shift_poly(param, base, arg.constant - anchor)
            if side * e >= 0:
                num = num * pn ** (side * e)
                den = den * pd ** (side * e)
            else:
                num = num * pd ** (-side * e)
                den = den * pn ** (-side * e)
        if net != 0:
            raise NonSimilarTermsError(
                f"unmatched factor poch({param}, {base})^{net}; "
                "ratio is not rational")
    num = num * a.poly_prefactor
    den = den * b.poly_prefactor
    return RationalFunction(num, den)


def shift_ratio(t: HyperTerm, dn: int, dk: int) -> RationalFunction:
    """t(n+dn, k+dk) / t(n, k) as a canonical rational function."""
    return cross_ratio(t, t, dn, dk)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Telescoping certificate: p(k) F(n,k-1) - q(k) F(n,k) = G(n+1,k) - G(n,k)."""

    F: HyperTerm
    G: HyperTerm
    p_poly: BivarPoly
    q_poly: BivarPoly

    def __post_init__(self):
        if self.p_poly.is_zero or self.q_poly.is_zero:
            raise DomainError("certificate polynomials must not be zero")
        for poly in (self.p_poly, self.q_poly):
            if any(i != 0 for (i, j) in poly.coeffs):
                raise DomainError("certificate polynomials must be univariate in k")


def is_wz_pair(c: Certificate) -> bool:
    """True when p(k) == q(k-1), the special shape where q*F and G pair up."""
    return c.p_poly == c.q_poly.shift(0, -1)


def verify_certificate_symbolic(c: Certificate) -> bool:
    """Certificate identity as rational functions at a generic point."""
    r1 = shift_ratio(c.F, 0, -1)
    r2 = cross_ratio(c.G, c.F, 1, 0)
    r3 = cross_ratio(c.G, c.F, 0, 0)
    p = RationalFunction.from_poly(c.p_poly)
    q = RationalFunction.from_poly(c.q_poly)
    return p * r1 - q == r2 - r3


def verify_certificate_numeric(c: Certificate, n_max: int) -> bool:
    """Exact check at every integer point 0 <= k <= n <= n_max.

    The grid includes the k = 0 and n = k boundaries, where the vanishing
    convention (invisible to the generic symbolic check) is exercised.
    """
    for n in range(n_max + 1):
        for k in range(n + 1):
            lhs = (c.p_poly.eval(n, k) * c.F.eval(n, k - 1)
                   - c.q_poly.eval(n, k) * c.F.eval(n, k))
            rhs = c.G.eval(n + 1, k) - c.G.eval(n, k)
            if lhs != rhs:
                return False
    return True


def telescope_sum(c: Certificate, N: int, k: int):
    """Both sides of the telescoped column identity, as exact rationals.

    Returns (p(k) * sum_{n<=N} F(n,k-1) - q(k) * sum_{n<=N} F(n,k),
             G(N+1, k) - G(0, k)); the two are equal for a valid certificate.
    """
    s_prev = sum((c.F.eval(n, k - 1) for n in range(N + 1)), Fraction(0))
    s_cur = sum((c.F.eval(n, k) for n in range(N + 1)), Fraction(0))
    lhs = c.p_poly.eval(0, k) * s_prev - c.q_poly.eval(0, k) * s_cur
    rhs = c.G.eval(N + 1, k) - c.G.eval(0, k)
    return lhs, rhs


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*/^(),":
            tokens.append(_Token(ch, ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text!r}",
                             tok.line, tok.col)
        return self.next()

    def error(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.col)

    # -- linear forms ------------------------------------------------------

    def parse_lin(self) -> LinearForm:
        cn = ck = c0 = 0
        sign = 1
        if self.peek().kind in "+-":
            sign = -1 if self.next().kind == "-" else 1
        while True:
            cn2, ck2, c02 = self._lin_part()
            cn += sign * cn2
            ck += sign * ck2
            c0 += sign * c02
            if self.peek().kind in "+-":
                sign = -1 if self.next().kind == "-" else 1
            else:
                return LinearForm(cn, ck, c0)

    def _lin_part(self):
        tok = self.peek()
        if tok.kind == "INT":
            value = int(self.next().text)
            if self.peek().kind == "*":
                self.next()
                name = self.expect("NAME")
                if name.text == "n":
                    return value, 0, 0
                if name.text == "k":
                    return 0, value, 0
                raise ParseError(f"unknown variable {name.text!r}",
                                 name.line, name.col)
            return 0, 0, value
        if tok.kind == "NAME" and tok.text in ("n", "k"):
            self.next()
            return (1, 0, 0) if tok.text == "n" else (0, 1, 0)
        self.error("expected a linear expression in n, k")

    def parse_lin_atom(self) -> LinearForm:
        """Exponent after '^': either a parenthesized linear form or one part."""
        if self.peek().kind == "(":
            self.next()
            lin = self.parse_lin()
            self.expect(")")
            return lin
        sign = 1
        if self.peek().kind == "-":
            self.next()
            sign = -1
        cn, ck, c0 = self._lin_part()
        return LinearForm(sign * cn, sign * ck, sign * c0)

    # -- polynomials -------------------------------------------------------

    def parse_poly(self) -> BivarPoly:
        acc = self._poly_term()
        while self.peek().kind in "+-":
            op = self.next().kind
            t = self._poly_term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def _poly_term(self) -> BivarPoly:
        acc = self._poly_factor()
        while self.peek().kind == "*":
            self.next()
            acc = acc * self._poly_factor()
        return acc

    def _poly_factor(self) -> BivarPoly:
        tok = self.peek()
        if tok.kind == "-":
            self.next()
            return -self._poly_factor()
        if tok.kind == "INT":
            self.next()
            value = Fraction(int(tok.text))
            if self.peek().kind == "/" and self.tokens[self.pos + 1].kind == "INT":
                self.next()
                value /= int(self.next().text)
            base = BivarPoly.const(value)
        elif tok.kind == "NAME" and tok.text in ("n", "k"):
            self.next()
            base = (BivarPoly.linear(1, 0, 0) if tok.text == "n"
                    else BivarPoly.linear(0, 1, 0))
        elif tok.kind == "(":
            self.next()
            base = self.parse_poly()
            self.expect(")")
        else:
            self.error("expected a polynomial in n, k")
        if self.peek().kind == "^":
            self.next()
            e = self.expect("INT")
            base = base ** int(e.text)
        return base

    # -- rationals ----------------------------------------------------------

    def parse_rational(self) -> Fraction:
        sign = 1
        if self.peek().kind == "-":
            self.next()
            sign = -1
        num = int(self.expect("INT").text)
        # only a/b with integer b is a literal; "a / poch(...)" is division
        if self.peek().kind == "/" and self.tokens[self.pos + 1].kind == "INT":
            self.next()
            den = int(self.next().text)
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def parse_signed_int(self) -> int:
        sign = 1
        if self.peek().kind == "-":
            self.next()
            sign = -1
        return sign * int(self.expect("INT").text)

    # -- terms ---------------------------------------------------------------

    def parse_term(self) -> HyperTerm:
        acc = self._parse_factor(invert=False)
        while self.peek().kind in "*/":
            op = self.next().kind
            acc = acc * self._parse_factor(invert=(op == "/"))
        return acc

    def _parse_factor(self, invert: bool) -> HyperTerm:
        piece = self._parse_piece()
        return piece.reciprocal() if invert else piece

    def _parse_piece(self) -> HyperTerm:
        tok = self.peek()
        if tok.kind == "NAME" and tok.text == "poch":
            return self._parse_poch()
        if tok.kind in ("INT", "-"):
            scalar = self.parse_rational()
            return HyperTerm(scalar=scalar)
        if tok.kind == "(":
            return self._parse_parenthesized()
        self.error("expected a factor")

    def _parse_poch(self) -> HyperTerm:
        self.expect("NAME")
        self.expect("(")
        param = self.parse_rational()
        self.expect(",")
        arg = self.parse_lin()
        self.expect(")")
        exponent = 1
        if self.peek().kind == "^":
            self.next()
            exponent = self.parse_signed_int()
            if exponent == 0:
                self.error("zero Pochhammer exponent is not allowed")
        return HyperTerm(factors=[PochFactor(param, arg, exponent)])

    def _parse_parenthesized(self) -> HyperTerm:
        start = self.pos
        try:
            self.expect("(")
            poly = self.parse_poly()
            self.expect(")")
        except ParseError:
            self.pos = start
            self.expect("(")
            sub = self.parse_term()
            self.expect(")")
            if self.peek().kind == "^":
                self.next()
                e = self.parse_signed_int()
                out = HyperTerm()
                piece = sub if e >= 0 else sub.reciprocal()
                for _ in range(abs(e)):
                    out = out * piece
                return out
            return sub
        if self.peek().kind == "^":
            if poly.is_constant and poly.constant_value() == -1:
                self.next()
                lin = self.parse_lin_atom()
                return HyperTerm(sign_exponent=lin)
            self.next()
            e = self.expect("INT")
            poly = poly ** int(e.text)
        if poly.is_constant:
            return HyperTerm(scalar=poly.constant_value())
        return HyperTerm(poly_prefactor=poly)


def parse(text: str) -> HyperTerm:
    """Parse one term of the DSL; errors carry line/column positions."""
    parser = _Parser(text)
    term = parser.parse_term()
    parser.expect("EOF")
    return term


def parse_poly(text: str) -> BivarPoly:
    """Parse a bare polynomial expression in n, k."""
    parser = _Parser(text)
    poly = parser.parse_poly()
    parser.expect("EOF")
    return poly


# ---------------------------------------------------------------------------
# pretty printer (inverse of parse on normalized terms)
# ---------------------------------------------------------------------------


def _lin_exponent_str(lin: LinearForm) -> str:
    txt = str(lin)
    single = txt in ("n", "k") or txt.lstrip("-").isdigit() and "-" not in txt
    return txt if single else f"({txt})"


def _poch_str(f: PochFactor, flip: bool = False) -> str:
    e = -f.exponent if flip else f.exponent
    base = f"poch({f.param},{f.arg})"
    return base if e == 1 else f"{base}^{e}"


def pretty(t: HyperTerm) -> str:
    num_parts = []
    s = t.sign_exponent
    scalar = t.scalar
    if (s.coef_n, s.coef_k) != (0, 0):
        # a negative scalar reads better absorbed into the sign exponent
        if scalar < 0:
            s = LinearForm(s.coef_n, s.coef_k, 1)
            scalar = -scalar
        num_parts.append(f"(-1)^{_lin_exponent_str(s)}")
    if scalar != 1:
        num_parts.append(str(scalar))
    if not t.poly_prefactor.is_constant:
        num_parts.append(f"({t.poly_prefactor})".replace(" ", ""))
    elif t.poly_prefactor.constant_value() != 1:
        num_parts.append(str(t.poly_prefactor.constant_value()))
    den_parts = []
    for f in t.factors:
        if f.exponent > 0:
            num_parts.append(_poch_str(f))
        else:
            den_parts.append(_poch_str(f, flip=True))
    if not num_parts:
        num_parts.append("1")
    out = " * ".join(num_parts)
    if den_parts:
        if len(den_parts) == 1:
            out += f" / {den_parts[0]}"
        else:
            out += " / (" + " * ".join(den_parts) + ")"
    return out


# ---------------------------------------------------------------------------
# certificate files
# ---------------------------------------------------------------------------


def parse_certificate(text: str) -> Certificate:
    """Parse the four-section certificate format (F:, G:, p:, q:)."""
    sections = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("expected 'label: expression'", lineno, 1)
        label, expr = line.split(":", 1)
        label = label.strip()
        if label not in ("F", "G", "p", "q"):
            raise ParseError(f"unknown section {label!r}", lineno, 1)
        if label in sections:
            raise ParseError(f"duplicate section {label!r}", lineno, 1)
        sections[label] = expr.strip()
    missing = [s for s in ("F", "G", "p", "q") if s not in sections]
    if missing:
        raise ParseError(f"missing sections: {', '.join(missing)}", 1, 1)
    return Certificate(
        F=parse(sections["F"]),
        G=parse(sections["G"]),
        p_poly=parse_poly(sections["p"]),
        q_poly=parse_poly(sections["q"]),
    )


def load_certificate(path) -> Certificate:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_certificate(fh.read())

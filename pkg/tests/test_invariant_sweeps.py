"""Wider randomized and exhaustive sweeps of the library invariants."""

import random
from fractions import Fraction

import pytest

from supercong import (BivarPoly, PadicContext, RationalFunction,
                       check_gamma_factorization, cross_ratio, parse, pretty,
                       product_identity, rising_exact, shift_ratio)
from supercong.hyperterm import HyperTerm, LinearForm, PochFactor

F_TEXT = ("(-1)^k * (8*n+1) * poch(1/4,n)^3 * poch(1/4,n+k)"
          " / (poch(1,n)^3 * poch(1,n-k) * poch(1/4,k)^2)")
G_TEXT = ("(-1)^(k-1) * 16 * poch(1/4,n)^3 * poch(1/4,n+k-1)"
          " / (poch(1,n-1)^3 * poch(1,n-k) * poch(1/4,k)^2)")


@pytest.mark.parametrize("p", [3, 7, 11])
def test_gamma_factorization_full_range(p):
    ctx = PadicContext(p, 4)
    for x in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)):
        for n in range(0, 201):
            assert check_gamma_factorization(x, n, ctx), (p, x, n)


def test_product_identity_long_range():
    prod = Fraction(1)
    half = Fraction(1)
    quarter = Fraction(1)
    for m in range(1, 501):
        prod *= Fraction(4 * m - 2, 4 * m - 3)
        half *= Fraction(1, 2) + (m - 1)
        quarter *= Fraction(1, 4) + (m - 1)
        assert prod == half / quarter
    # the callable agrees with the incremental oracle at sampled lengths
    for m in (0, 1, 17, 250, 500):
        lhs, rhs = product_identity(m)
        assert lhs == rhs


def test_forward_shift_ratio_closed_form():
    F = parse(F_TEXT)
    n = BivarPoly.linear(1, 0, 0)
    k = BivarPoly.linear(0, 1, 0)
    c = BivarPoly.const
    expected = RationalFunction(
        (n.scale(8) + c(9)) * (n.scale(4) + c(1)) ** 3
        * (n.scale(4) + k.scale(4) + c(1)),
        (n.scale(8) + c(1)) * ((n + c(1)).scale(4)) ** 3
        * (n - k + c(1)).scale(4))
    ratio = shift_ratio(F, 1, 0)
    assert ratio == expected
    # numeric cross-check at 20 points inside the n >= k domain
    points = [(n0, k0) for n0 in range(3, 8) for k0 in range(0, 4)]
    assert len(points) == 20
    for n0, k0 in points:
        assert ratio.eval(n0, k0) == F.eval(n0 + 1, k0) / F.eval(n0, k0)


def test_eval_shift_consistency_both_terms():
    for text in (F_TEXT, G_TEXT):
        t = parse(text)
        up = shift_ratio(t, 1, 0)
        right = shift_ratio(t, 0, 1)
        for n0 in range(1, 8):
            for k0 in range(0, n0):
                base = t.eval(n0, k0)
                if base == 0:
                    continue
                assert t.eval(n0 + 1, k0) == base * up.eval(n0, k0)
                assert t.eval(n0, k0 + 1) == base * right.eval(n0, k0)


def _random_term(rng) -> HyperTerm:
    # argument shapes mirror the shipped terms (n, k, n+k and integer offsets),
    # keeping ratio degrees inside the small envelope the algebra targets
    params = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1),
              Fraction(3, 2)]
    shapes = [(1, 0), (0, 1), (1, 1), (1, -1)]
    factors = []
    for _ in range(rng.randint(1, 4)):
        cn, ck = rng.choice(shapes)
        arg = LinearForm(cn, ck, rng.randint(-2, 2))
        factors.append(PochFactor(rng.choice(params), arg,
                                  rng.choice([-2, -1, 1, 2])))
    sign = LinearForm(rng.randint(0, 1), rng.randint(0, 1), rng.randint(0, 1))
    scalar = Fraction(rng.choice([-16, -3, -1, 1, 2, 5]),
                      rng.choice([1, 2, 4]))
    poly = BivarPoly.linear(rng.randint(0, 3), rng.randint(0, 2),
                            rng.randint(1, 5))
    return HyperTerm(sign, poly, scalar, factors)


def test_parse_pretty_identity_randomized():
    rng = random.Random(9157)
    for _ in range(120):
        t = _random_term(rng)
        assert parse(pretty(t)) == t


def test_self_cross_ratio_randomized():
    rng = random.Random(9158)
    for _ in range(40):
        t = _random_term(rng)
        assert cross_ratio(t, t, 0, 0) == RationalFunction.one()
        dn, dk = rng.randint(-1, 1), rng.randint(-1, 1)
        ratio = shift_ratio(t, dn, dk)
        # spot check at a generic point clear of poles and zero factors
        for n0, k0 in ((9, 4), (11, 2)):
            try:
                expected = t.eval(n0 + dn, k0 + dk) / t.eval(n0, k0)
            except Exception:
                continue
            if t.eval(n0, k0) == 0:
                continue
            assert ratio.eval(n0, k0) == expected


def test_rising_matches_split_products():
    rng = random.Random(9159)
    for _ in range(50):
        x = Fraction(rng.randint(1, 9), rng.choice([1, 2, 4]))
        n = rng.randint(0, 25)
        assert rising_exact(x, n) == rising_exact(x, n // 2) \
            * rising_exact(x + n // 2, n - n // 2)

"""Term DSL: parsing, exact evaluation, shift quotients, certificates."""

from fractions import Fraction

import pytest

from supercong import (BivarPoly, Certificate, DomainError, LinearForm,
                       NonSimilarTermsError, ParseError, RationalFunction,
                       cross_ratio, is_wz_pair, parse, parse_certificate,
                       parse_poly, pretty, shift_ratio, telescope_sum,
                       verify_certificate_numeric, verify_certificate_symbolic)
from supercong.suite import default_certificate_path

F_TEXT = ("(-1)^k * (8*n+1) * poch(1/4,n)^3 * poch(1/4,n+k)"
          " / (poch(1,n)^3 * poch(1,n-k) * poch(1/4,k)^2)")
G_TEXT = ("(-1)^(k-1) * 16 * poch(1/4,n)^3 * poch(1/4,n+k-1)"
          " / (poch(1,n-1)^3 * poch(1,n-k) * poch(1/4,k)^2)")


@pytest.fixture(scope="module")
def cert():
    return Certificate(parse(F_TEXT), parse(G_TEXT),
                       parse_poly("4*k-3"), parse_poly("4*k-2"))


# -- parsing -------------------------------------------------------------


def test_parse_trivial_term():
    t = parse("poch(1,n)")
    assert len(t.factors) == 1
    f = t.factors[0]
    assert (f.param, f.arg, f.exponent) == (1, LinearForm(1, 0, 0), 1)
    assert t.eval(5, 0) == 120


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse("poch(1/4, n) * poch(")
    assert err.value.line == 1 and err.value.column >= 20
    with pytest.raises(ParseError):
        parse("poch(1/4,n)^0")
    with pytest.raises(ParseError):
        parse("poch(x, n)")  # non-rational parameter


def test_parse_merges_repeated_factors():
    t = parse("poch(1/4,k) * poch(1/4,k)")
    assert len(t.factors) == 1 and t.factors[0].exponent == 2
    collapsed = parse("poch(1/2,n) / poch(1/2,n)")
    assert collapsed.factors == ()


def test_pretty_print_round_trip(cert):
    for t in (cert.F, cert.G, parse("poch(1,n)"),
              parse("3/4 * (n^2+k) * poch(1/2,n-k)^2 / poch(1,n)")):
        assert parse(pretty(t)) == t


# -- evaluation ----------------------------------------------------------


def test_eval_examples(cert):
    assert cert.F.eval(0, 0) == 1
    assert cert.F.eval(1, 0) == Fraction(9, 256)
    assert cert.G.eval(0, 1) == 0  # 1/(1)_{n-1} kills the term at n = 0


def test_eval_negative_length_extension(cert):
    # (1/4)_{-1} = 1/(1/4 - 1) = -4/3 makes the k = 0 boundary finite
    assert cert.F.eval(0, -1) == Fraction(3, 4)


def test_eval_summand_restriction(cert):
    # F at k = 0 is exactly the series summand
    from supercong import sum_exact
    total = Fraction(0)
    for n in range(12):
        total += cert.F.eval(n, 0)
    assert total == sum_exact(11)


def test_eval_undefined_cases():
    with pytest.raises(DomainError):
        parse("poch(0,n)^-1").eval(2, 0)   # reciprocal of a genuine zero
    with pytest.raises(DomainError):
        parse("poch(1,k)").eval(0, -1)     # (1)_{-1} has no finite value


def test_eval_shift_consistency(cert):
    ratio = shift_ratio(cert.F, 1, 0)
    for n in range(6):
        for k in range(n + 1):
            expected = cert.F.eval(n, k) * ratio.eval(n, k)
            assert cert.F.eval(n + 1, k) == expected


# -- ratios ----------------------------------------------------------------


def _expected_ratios():
    n = BivarPoly.linear(1, 0, 0)
    k = BivarPoly.linear(0, 1, 0)
    c = BivarPoly.const
    r1 = RationalFunction(-(k.scale(4) - c(3)) ** 2,
                          (n.scale(4) + k.scale(4) - c(3)) * (n - k + c(1)) * c(4))
    r2 = RationalFunction(-(n.scale(4) + c(1)) ** 3,
                          (n.scale(8) + c(1)) * (n - k + c(1)) * c(4))
    r3 = RationalFunction(-(n ** 3).scale(64),
                          (n.scale(4) + k.scale(4) - c(3)) * (n.scale(8) + c(1)))
    return r1, r2, r3


def test_ratio_formulas(cert):
    r1, r2, r3 = _expected_ratios()
    assert shift_ratio(cert.F, 0, -1) == r1
    assert cross_ratio(cert.G, cert.F, 1, 0) == r2
    assert cross_ratio(cert.G, cert.F, 0, 0) == r3


def test_trivial_ratios(cert):
    one = parse("poch(1,n) / poch(1,n)")
    assert shift_ratio(one, 2, -1) == RationalFunction.one()
    assert cross_ratio(cert.F, cert.F, 0, 0) == RationalFunction.one()


def test_cross_ratio_rejects_dissimilar(cert):
    with pytest.raises(NonSimilarTermsError):
        cross_ratio(cert.F, parse("poch(1/2,n)"), 0, 0)


def test_shift_bound():
    with pytest.raises(DomainError):
        shift_ratio(parse("poch(1,n)"), 5, 0)


# -- certificates --------------------------------------------------------------


def test_certificate_verifies(cert):
    assert verify_certificate_symbolic(cert)
    assert verify_certificate_numeric(cert, 12)


def test_certificate_rejects_bivariate_polys(cert):
    with pytest.raises(DomainError):
        Certificate(cert.F, cert.G, parse_poly("4*n-3"), cert.q_poly)


def test_mutations_fail(cert):
    mutated = Certificate(cert.F, cert.G, cert.p_poly, parse_poly("4*k-1"))
    assert not verify_certificate_symbolic(mutated)
    assert not verify_certificate_numeric(mutated, 5)
    scaled_g = Certificate(cert.F, parse("2 * " + G_TEXT), cert.p_poly, cert.q_poly)
    assert not verify_certificate_symbolic(scaled_g)
    assert not verify_certificate_numeric(scaled_g, 5)


def test_wz_pair_predicate(cert):
    # p(k) = 4k-3 but q(k-1) = 4k-6: the shipped certificate is NOT a WZ pair
    assert not is_wz_pair(cert)
    wz = Certificate(cert.F, cert.G, parse_poly("4*k-6"), parse_poly("4*k-2"))
    assert is_wz_pair(wz)


def test_telescope_sum(cert):
    for N, k in ((5, 1), (0, 1), (10, 3)):
        lhs, rhs = telescope_sum(cert, N, k)
        assert lhs == rhs


def test_certificate_file_round_trip(cert):
    with open(default_certificate_path(), "r", encoding="utf-8") as fh:
        loaded = parse_certificate(fh.read())
    assert loaded == cert


def test_certificate_file_errors():
    with pytest.raises(ParseError):
        parse_certificate("F: poch(1,n)\nG: poch(1,n)\np: k")  # missing q
    with pytest.raises(ParseError) as err:
        parse_certificate("F: poch(1,n\nG: poch(1,n)\np: k\nq: k")
    assert err.value.line == 1

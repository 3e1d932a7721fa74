"""Congruence engine: series oracles, right sides, checks, batch behavior."""

from fractions import Fraction

import pytest

from supercong import (CapExceededError, CaseTag, DomainError, PadicContext,
                       PadicNum, TheoremCase, batch, boundary_term_valuation,
                       check, check_boundary_valuation, check_infinite_series,
                       congruent_mod, rhs_value, sum_exact, sum_padic,
                       summand_valuation, valuation_rat)
from supercong.hyperterm import load_certificate, telescope_sum
from supercong.suite import default_certificate_path


def test_sum_exact_small_values():
    assert sum_exact(0) == 1
    assert sum_exact(1) == Fraction(265, 256)
    assert sum_exact(2) == Fraction(1096065, 1048576)
    with pytest.raises(CapExceededError):
        sum_exact(2001)


def test_sum_padic_examples():
    assert sum_padic(1, PadicContext(5, 3)).residue(3) == 265 * pow(256, -1, 125) % 125
    assert sum_padic(0, PadicContext(7, 2)) == PadicNum.one(PadicContext(7, 2))
    ctx = PadicContext(3, 7)
    lhs = sum_padic(60, ctx)
    rhs = PadicNum.from_rational(sum_exact(60), ctx)
    assert congruent_mod(lhs, rhs, 7)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_oracle_equivalence(p):
    ctx = PadicContext(p, 6)
    acc = PadicNum.zero(ctx)
    term = PadicNum.one(ctx)
    exact = Fraction(0)
    exact_term = Fraction(1)
    from supercong.engine import _step
    for n in range(61):
        acc = acc + term
        exact += exact_term
        assert congruent_mod(acc, PadicNum.from_rational(exact, ctx), 6)
        term = term * PadicNum.from_rational(_step(n), ctx)
        exact_term *= _step(n)


def test_valuation_bookkeeping_guard():
    # identical residues when run with three extra digits
    for p, m, t in ((3, 40, 5), (7, 25, 4), (11, 33, 6)):
        lo = sum_padic(m, PadicContext(p, t))
        hi = sum_padic(m, PadicContext(p, t + 3))
        assert lo.residue(t) == hi.residue(t)


@pytest.mark.parametrize("p", [3, 7, 11])
def test_summand_integrality(p):
    for n in range(0, 120):
        assert summand_valuation(n, p) >= 0


@pytest.mark.parametrize("p", [3, 7])
def test_summand_valuation_matches_exact(p):
    from supercong import rising_exact
    for n in range(0, 45):
        exact = Fraction(8 * n + 1) * rising_exact(Fraction(1, 4), n) ** 4 \
            / rising_exact(Fraction(1), n) ** 4
        assert summand_valuation(n, p) == valuation_rat(exact, p)


def test_rhs_value_valuations():
    ctx = PadicContext(3, 8)
    v = rhs_value(TheoremCase(CaseTag.THM_1_1, 3, 3), ctx, gamma_digits=4)
    assert v.valuation == 3
    ctx5 = PadicContext(5, 7)
    assert rhs_value(TheoremCase(CaseTag.G2, 5, t=1), ctx5, gamma_digits=3).valuation == 1
    ctx = PadicContext(3, 11)
    lhs = rhs_value(TheoremCase(CaseTag.THM_1_2, 3, 5), ctx)
    manual = -(PadicNum(ctx, 3, 1) * sum_padic(6, ctx))
    assert lhs == manual


def test_check_green_cases():
    assert check(TheoremCase(CaseTag.THM_1_1, 3, 3)).holds
    assert check(TheoremCase(CaseTag.THM_1_2, 3, 5)).holds
    assert check(TheoremCase(CaseTag.G2, 5, t=1)).holds
    assert check(TheoremCase(CaseTag.SWISHER_T3, 7, t=3)).holds
    rep = check(TheoremCase(CaseTag.G3_ODD_R, 3, 3))
    assert rep.holds and rep.extra["strengthened_holds"]
    assert rep.extra["strengthened_exponent"] == 4


def test_check_preconditions():
    with pytest.raises(DomainError):
        TheoremCase(CaseTag.THM_1_1, 5, 3)  # p = 1 mod 4
    with pytest.raises(DomainError):
        TheoremCase(CaseTag.THM_1_2, 3, 3)  # needs r > 3
    with pytest.raises(DomainError):
        TheoremCase(CaseTag.G2, 7, t=1)     # p = 3 mod 4
    with pytest.raises(DomainError):
        TheoremCase(CaseTag.G2, 5, r=2, t=1)


def test_check_cap_skips():
    rep = check(TheoremCase(CaseTag.THM_1_1, 3, 5), cap=10 ** 2)
    assert rep.skipped and rep.holds is None


def test_boundary_valuation_reports_minimum():
    # exact counterexample to the claimed 2(r-1) bound: k = 3 at (3, 3)
    assert boundary_term_valuation(3, 3, 3) == 2
    min_v, at_k = check_boundary_valuation(3, 3)
    assert (min_v, at_k) == (2, 3)
    rep = check(TheoremCase(CaseTag.LEMMA_3_2, 3, 3))
    assert rep.holds is False and rep.extra["min_valuation"] == 2


def test_boundary_valuation_matches_exact_term():
    cert = load_certificate(default_certificate_path())
    p, r = 3, 3
    n0 = (p ** r + 1) // 4
    for k in (1, 2, 3, 5, 6):
        exact = cert.G.eval(n0, k)
        assert boundary_term_valuation(p, r, k) == valuation_rat(exact, p)


def test_telescoping_chain_exact():
    """Unrolled column telescoping reproduces S exactly when the boundary
    terms are kept (p = 3, r = 3 instance, all in rationals)."""
    cert = load_certificate(default_certificate_path())
    p, r = 3, 3
    K = (p ** r - 3) // 4
    sums = []
    for k in range(K + 1):
        sums.append(sum(cert.F.eval(n, k) for n in range(K + 1)))
    assert sums[0] == sum_exact(K)
    # column K collapses to the single diagonal term
    assert sums[K] == cert.F.eval(K, K)
    # every step identity, with G(0, k) vanishing for k >= 1
    for k in range(1, K + 1):
        lhs, rhs = telescope_sum(cert, K, k)
        assert lhs == rhs
        assert cert.G.eval(0, k) == 0
    prefactor = Fraction(1)
    boundary = Fraction(0)
    for k in range(1, K + 1):
        boundary += prefactor * cert.G.eval(K + 1, k) / (4 * k - 3)
        prefactor *= Fraction(4 * k - 2, 4 * k - 3)
    assert sums[0] == prefactor * sums[K] + boundary


def test_infinite_series_values():
    partial, rhs, diff = check_infinite_series(1)
    assert partial == 1.03515625
    assert diff > 0


def test_batch_order_and_workers():
    cases = [TheoremCase(CaseTag.G2, 5, t=1),
             TheoremCase(CaseTag.SWISHER_T3, 3, t=3),
             TheoremCase(CaseTag.THM_1_1, 3, 3)]
    seq = batch(cases, workers=1)
    par = batch(cases, workers=8)
    assert [r.case for r in seq] == cases
    for a, b in zip(seq, par):
        da, db = a.to_dict(), b.to_dict()
        da.pop("wall_ms"), db.pop("wall_ms")
        assert da == db
    assert batch([], workers=4) == []


def test_batch_aggregates_errors():
    # an invalid case smuggled past validation errors alone, others proceed
    bad = object.__new__(TheoremCase)
    object.__setattr__(bad, "tag", CaseTag.LEMMA_3_2)
    object.__setattr__(bad, "p", 3)
    object.__setattr__(bad, "r", 2)
    object.__setattr__(bad, "t", None)
    reports = batch([TheoremCase(CaseTag.G2, 5, t=1), bad], workers=2)
    assert reports[0].holds and reports[0].error is None
    assert reports[1].error is not None


def test_report_invariant_holds_iff_excess_nonnegative():
    from supercong import default_battery
    asserted, informational = default_battery()
    for case in asserted + informational:
        rep = check(case)
        if rep.skipped or rep.error:
            continue
        assert rep.holds == (rep.excess_valuation >= 0), rep.to_dict()


def test_informational_branches_run_and_report():
    # conjectural branches: the check must run and produce a verdict either way
    rep = check(TheoremCase(CaseTag.G3_ODD_PRIME_1MOD4, 5, 2))
    assert rep.error is None and rep.holds in (True, False)
    assert rep.note  # gamma-convention flag travels with the report
    rep = check(TheoremCase(CaseTag.G3_EVEN_R, 3, 2))
    assert rep.error is None and rep.holds in (True, False)


def test_three_quarters_truncation_instance():
    # S(5) at p = 7: valuation 2, unit 5 mod 7 (the closed form must match it)
    ctx = PadicContext(7, 5)
    s5 = sum_padic(5, ctx)
    assert (s5.valuation, s5.unit % 7) == (2, 5)
    assert s5.residue(3) == 245
    rhs = rhs_value(TheoremCase(CaseTag.SWISHER_T3, 7, t=3), ctx, gamma_digits=3)
    assert congruent_mod(s5, rhs, 3)


def test_negative_truncation_rejected():
    with pytest.raises(DomainError):
        sum_exact(-1)
    with pytest.raises(DomainError):
        sum_padic(-2, PadicContext(3, 3))

"""Exact p-adic verification of truncated quartic hypergeometric series.

The library checks, in exact arithmetic, congruences of the partial sums
S(m) = sum_{n=0}^{m} (8n+1) (1/4)_n^4 / (1)_n^4 against p-adic gamma closed
forms, verifies the telescoping certificate behind them both symbolically and
on exact grids, and ships the rising-factorial and p-adic gamma machinery
those checks are built from.
"""

from .engine import (CaseTag, CongruenceReport, TheoremCase, batch,
                     boundary_term_valuation, check, check_boundary_valuation,
                     check_infinite_series, default_battery, rhs_value,
                     sum_exact, sum_padic, summand_valuation)
from .errors import (CapExceededError, ContextMismatchError, DomainError,
                     NonSimilarTermsError, ParseError, PrecisionError,
                     SupercongError)
from .gamma import (check_ratio, check_reflection, gamma_int, gamma_rational,
                    rep_mod_p)
from .hyperterm import (Certificate, HyperTerm, LinearForm, PochFactor,
                        cross_ratio, is_wz_pair, load_certificate, parse,
                        parse_certificate, parse_poly, pretty, shift_ratio,
                        telescope_sum, verify_certificate_numeric,
                        verify_certificate_symbolic)
from .padic import (INFINITE, PadicContext, PadicNum, congruent_mod,
                    excess_valuation, is_prime, valuation_int, valuation_rat)
from .pochhammer import (PochValue, check_descent, check_gamma_factorization,
                         check_half_descent, p_factor_split, product_identity,
                         rising_exact)
from .polynomials import BivarPoly, RationalFunction
from .suite import RunConfig, default_certificate_path, run_suite

__version__ = "0.1.0"

__all__ = [
    "BivarPoly", "CapExceededError", "CaseTag", "Certificate",
    "CongruenceReport", "ContextMismatchError", "DomainError", "HyperTerm",
    "INFINITE", "LinearForm", "NonSimilarTermsError", "PadicContext",
    "PadicNum", "ParseError", "PochFactor", "PochValue", "PrecisionError",
    "RationalFunction", "RunConfig", "SupercongError", "TheoremCase", "batch",
    "boundary_term_valuation", "check", "check_boundary_valuation",
    "check_descent", "check_gamma_factorization", "check_half_descent",
    "check_infinite_series", "check_ratio", "check_reflection",
    "congruent_mod", "cross_ratio", "default_battery",
    "default_certificate_path", "excess_valuation", "gamma_int",
    "gamma_rational", "is_prime", "is_wz_pair", "load_certificate", "parse",
    "parse_certificate", "parse_poly", "p_factor_split", "pretty",
    "product_identity", "rep_mod_p", "rhs_value", "rising_exact", "run_suite",
    "shift_ratio", "sum_exact", "sum_padic", "summand_valuation",
    "telescope_sum", "valuation_int", "valuation_rat",
    "verify_certificate_numeric", "verify_certificate_symbolic",
]

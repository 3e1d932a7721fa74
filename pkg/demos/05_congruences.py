"""Congruence checks for the truncated series S(m) = sum (8n+1)(1/4)_n^4/(1)_n^4.

Each case compares the p-adic sum against a closed form, at a modulus that
exceeds what generic congruences would give.  Two of the candidate claims in
the battery are refuted by exact arithmetic; their reports carry the
counterexample residues, which is precisely the point of a verifier.
"""

from supercong import (CaseTag, PadicContext, TheoremCase, check,
                       check_infinite_series, sum_exact, sum_padic)

print("the series, exactly and p-adically:")
print(f"  S(1) = {sum_exact(1)}")
print(f"  S(6) mod 3^4: {sum_padic(6, PadicContext(3, 4))}")


def show(case):
    rep = check(case)
    verdict = "holds" if rep.holds else "VIOLATED"
    line = (f"  {case.describe():24s} mod p^{rep.modulus_exponent}: {verdict}"
            f"  lhs = {rep.lhs}, rhs = {rep.rhs}")
    if rep.extra:
        line += f"  {rep.extra}"
    print(line)


print("\nclosed forms that exact arithmetic confirms:")
show(TheoremCase(CaseTag.G2, 13, t=1))
show(TheoremCase(CaseTag.SWISHER_T1, 13, t=1))
show(TheoremCase(CaseTag.SWISHER_T3, 11, t=3))
show(TheoremCase(CaseTag.THM_1_1, 3, 3))
show(TheoremCase(CaseTag.THM_1_2, 3, 5))
show(TheoremCase(CaseTag.G3_ODD_R, 7, 3))

print("\nclaims the verifier refutes (counterexamples in the residues):")
show(TheoremCase(CaseTag.THM_1_1, 7, 3))
show(TheoremCase(CaseTag.LEMMA_3_2, 3, 3))

print("\nfloating-point sanity against the series limit:")
partial, limit, diff = check_infinite_series(1000)
print(f"  S_1000 = {partial:.10f}, limit = {limit:.10f}, tail = {diff:.2e}")

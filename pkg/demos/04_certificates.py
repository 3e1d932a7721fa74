"""Telescoping certificates: the term DSL, shift quotients, verification.

The shipped certificate asserts p(k) F(n,k-1) - q(k) F(n,k) = G(n+1,k) - G(n,k)
for the quartic-series summand family.  Symbolic verification clears
denominators and compares polynomials; the numeric grid exercises the
boundary conventions (reciprocal factors that vanish) the generic check
cannot see.
"""

from supercong import (cross_ratio, is_wz_pair, load_certificate, pretty,
                       shift_ratio, telescope_sum, verify_certificate_numeric,
                       verify_certificate_symbolic)
from supercong.suite import default_certificate_path

cert = load_certificate(default_certificate_path())
print("F =", pretty(cert.F))
print("G =", pretty(cert.G))
print("p =", cert.p_poly, "  q =", cert.q_poly)

print("\nvalues: F(0,0) =", cert.F.eval(0, 0), "  F(1,0) =", cert.F.eval(1, 0))
print("boundary: G(0,1) =", cert.G.eval(0, 1),
      "  F(0,-1) =", cert.F.eval(0, -1), " (reciprocal extension)")

print("\nshift quotients as reduced rational functions:")
print("  F(n,k-1)/F(n,k)  =", shift_ratio(cert.F, 0, -1))
print("  G(n+1,k)/F(n,k)  =", cross_ratio(cert.G, cert.F, 1, 0))
print("  G(n,k)/F(n,k)    =", cross_ratio(cert.G, cert.F, 0, 0))

print("\nsymbolic verification:", verify_certificate_symbolic(cert))
print("numeric grid (n, k up to 25):", verify_certificate_numeric(cert, 25))
print("is a strict WZ pair (p(k) = q(k-1)):", is_wz_pair(cert))

print("\ncolumn telescoping, exact rationals:")
for N, k in ((5, 1), (10, 3)):
    lhs, rhs = telescope_sum(cert, N, k)
    print(f"  N = {N}, k = {k}: both sides = {lhs} -> {lhs == rhs}")

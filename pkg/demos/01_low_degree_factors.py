"""Finding low-degree algebraic roots of a monic integer polynomial.

Two independent searches are compared: exhaustive enumeration of all bounded
candidate factors, and reconstruction of factors from subsets of the numeric
roots.  Both finish with exact trial division, so every reported factor is a
certificate.
"""
from polylab import (IntPoly, classify_irreducibility, find_roots,
                     low_degree_factors_enumerate, low_degree_factors_subset)

# (z + 1)(z^2 + 1)(z^3 - z - 1): one linear, one quadratic, one cubic factor
f = IntPoly.of(1, 1) * IntPoly.of(1, 0, 1) * IntPoly.of(-1, -1, 0, 1)
print(f"f = {f}")

rs = find_roots(f)
print(f"\nnumeric roots (converged={rs.converged}):")
for z in sorted(rs.roots, key=abs):
    print(f"  {z.real:+.6f} {z.imag:+.6f}i   |z| = {abs(z):.6f}")

print("\nenumeration search, degree <= 2, root bound M = 2:")
for fac in low_degree_factors_enumerate(f, 2, 2).factors:
    print(f"  {fac.poly}   (method: {fac.method})")

print("\nsubset-reconstruction search, degree <= 3:")
for fac in low_degree_factors_subset(f, 3).factors:
    print(f"  {fac.poly}   (method: {fac.method})")

print("\nirreducibility pipeline on each reported factor:")
for fac in low_degree_factors_subset(f, 3).factors:
    report = classify_irreducibility(fac.poly)
    print(f"  {fac.poly}: {report.status} ({report.certificate})")

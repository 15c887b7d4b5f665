"""Cyclotomic polynomials and the inverse Euler totient."""
from __future__ import annotations

from .intpoly import IntPoly, poly_divides, poly_divmod_monic
from .numtheory import divisors, euler_phi, totient_sieve

_cyclotomic_cache: dict[int, IntPoly] = {}


def cyclotomic(kk: int) -> IntPoly:
    """The kk-th cyclotomic polynomial, by exact division of z^kk - 1 by the
    product of the lower-index cyclotomic polynomials."""
    if kk < 1:
        raise ValueError("need kk >= 1")
    cached = _cyclotomic_cache.get(kk)
    if cached is not None:
        return cached
    if kk == 1:
        phi = IntPoly.of(-1, 1)
    else:
        num = IntPoly.monomial(kk) - IntPoly.of(1)
        for d in divisors(kk):
            if d < kk:
                q, r = poly_divmod_monic(num, cyclotomic(d))
                assert r.is_zero
                num = q
        phi = num
    assert phi.degree == euler_phi(kk)
    _cyclotomic_cache[kk] = phi
    return phi


def inverse_totient(d: int) -> list[int]:
    """Sorted list of all kk with phi(kk) = d.  Searches kk <= 2*d^2, which is
    exhaustive because phi(kk) >= sqrt(kk/2)."""
    if d < 1:
        raise ValueError("need d >= 1")
    bound = 2 * d * d
    phi = totient_sieve(bound)
    return [kk for kk in range(1, bound + 1) if phi[kk] == d]


def cyclotomic_factors(f: IntPoly, dmax: int) -> list[tuple[int, IntPoly]]:
    """All cyclotomic polynomials of degree <= dmax dividing the monic f."""
    if not f.is_monic:
        raise ValueError("need a monic polynomial")
    out = []
    for d in range(1, dmax + 1):
        for kk in inverse_totient(d):
            phi = cyclotomic(kk)
            if phi.degree <= f.degree and poly_divides(phi, f):
                out.append((kk, phi))
    return out

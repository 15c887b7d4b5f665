"""Floating-point root localization via Aberth-Ehrlich simultaneous iteration.

Used by the subset-reconstruction factor search and by annulus / root-bound
property checks.  Non-convergence is reported with a flag, never silently.
An escalation tier refines roots with high-precision Newton steps (mpmath)
when the double-precision result is too ambiguous to round safely.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath

from .intpoly import IntPoly, cauchy_root_bound

CONVERGED_TOL = 1e-12
CLUSTERED_TOL = 1e-6
MAX_SWEEPS = 500
RESIDUAL_ACCEPT = 1e-8


class RootFindingError(Exception):
    pass


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    converged: bool
    clustered: bool = False

    def to_json(self) -> dict:
        return {
            "roots": [[z.real, z.imag] for z in self.roots],
            "residuals": list(self.residuals),
            "converged": self.converged,
            "clustered": self.clustered,
        }


def _float_shifted(c: int, sh: int) -> float:
    # float(c * 2**sh) with 53-bit relative precision, safe beyond double range
    if c == 0:
        return 0.0
    neg = c < 0
    a = -c if neg else c
    bits = a.bit_length()
    if bits > 53:
        a >>= bits - 53
        sh += bits - 53
    try:
        v = math.ldexp(float(a), sh)
    except OverflowError:
        v = math.inf
    return -v if neg else v


def _float_coeffs(f: IntPoly) -> tuple[list[float], int]:
    # Substitute z = 2^e * w so the w-polynomial's coefficient ratios fit in
    # doubles even when the integers do not; returns (coefficients of the
    # w-polynomial up to a harmless global power of two, e).  The roots of f
    # are 2^e times the roots of the returned coefficients.
    cs = f.coeffs
    n = len(cs) - 1
    bits_lead = abs(cs[-1]).bit_length()
    e = 0
    for i, c in enumerate(cs[:-1]):
        if c:
            need = -((bits_lead + 500 - abs(c).bit_length()) // (n - i))
            if need > e:
                e = need
    # global factor 2^(-bits_lead) keeps everything near unit scale
    return [_float_shifted(c, -(n - i) * e - bits_lead) for i, c in enumerate(cs)], e


def _residual(cs: list[float], z: complex) -> float:
    acc = 0j
    scale = 0.0
    az = abs(z)
    pw = 1.0
    for c in cs:
        scale += abs(c) * pw
        pw *= az
    for c in reversed(cs):
        acc = acc * z + c
    return abs(acc) / max(scale, 1e-300)


def find_roots(f: IntPoly) -> RootSet:
    """All complex roots of f by Aberth-Ehrlich iteration, started on the
    Cauchy-bound circle.  Convergence at 1e-12 relative correction; relaxes
    to 1e-6 with the "clustered" flag when corrections stagnate."""
    if f.is_zero:
        raise ValueError("cannot find roots of the zero polynomial")
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    cs, scale_exp = _float_coeffs(f)
    n = len(cs) - 1
    lead = cs[-1]
    cs = [c / lead for c in cs]
    radius = 1.0 + max(abs(c) for c in cs[:-1]) if n > 0 else 1.0
    zs = [radius * cmath.exp(2j * math.pi * (j + 0.25) / n + 0.5j) for j in range(n)]
    dcs = [i * c for i, c in enumerate(cs)][1:]

    def horner(coeffs, z):
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    maxcorr = math.inf
    stagnant = 0
    for sweep in range(MAX_SWEEPS):
        prev = maxcorr
        maxcorr = 0.0
        for j in range(n):
            z = zs[j]
            p = horner(cs, z)
            dp = horner(dcs, z)
            if dp == 0:
                zs[j] = z + 1e-8 * (1 + abs(z))
                maxcorr = math.inf
                continue
            w = p / dp
            s = 0j
            for k in range(n):
                if k != j:
                    dz = z - zs[k]
                    if dz == 0:
                        dz = 1e-14
                    s += 1.0 / dz
            denom = 1.0 - w * s
            corr = w if denom == 0 else w / denom
            zs[j] = z - corr
            rel = abs(corr) / (1.0 + abs(zs[j]))
            if rel > maxcorr:
                maxcorr = rel
        if maxcorr < CONVERGED_TOL:
            break
        stagnant = stagnant + 1 if maxcorr >= 0.5 * prev else 0
        if stagnant >= 30 and maxcorr < CLUSTERED_TOL:
            break

    residuals = tuple(_residual(cs, z) for z in zs)
    clustered = maxcorr >= CONVERGED_TOL
    converged = maxcorr < CLUSTERED_TOL and all(r < math.sqrt(RESIDUAL_ACCEPT) if clustered
                                               else r < RESIDUAL_ACCEPT for r in residuals)
    if scale_exp:
        zs = [math.ldexp(z.real, scale_exp) + 1j * math.ldexp(z.imag, scale_exp)
              for z in zs]
    return RootSet(tuple(zs), residuals, converged, clustered and converged)


def refine_roots(f: IntPoly, roots, steps: int = 30, dps: int = 50):
    """Escalation tier: Newton-refine approximate roots at high precision.
    Returns a list of mpmath complex numbers."""
    with mpmath.workdps(dps):
        cs = [mpmath.mpf(c) for c in f.coeffs]
        dcs = [i * c for i, c in enumerate(cs)][1:]

        def horner(coeffs, z):
            acc = mpmath.mpc(0)
            for c in reversed(coeffs):
                acc = acc * z + c
            return acc

        out = []
        for z0 in roots:
            z = mpmath.mpc(z0)
            for _ in range(steps):
                dp = horner(dcs, z)
                if dp == 0:
                    break
                step = horner(cs, z) / dp
                z = z - step
                if abs(step) < mpmath.mpf(10) ** (-dps + 5):
                    break
            out.append(z)
        return out


def max_root_modulus(f: IntPoly) -> float:
    """Maximum modulus over the numeric root set; raises on non-convergence."""
    rs = find_roots(f)
    if not rs.converged:
        raise RootFindingError("root finding did not converge")
    return max(abs(z) for z in rs.roots)


def annulus_check(f: IntPoly) -> bool:
    """For a monic polynomial whose other coefficients are all +-1: true iff
    every numeric root modulus lies in [0.5 + 1e-6, 2 - 1e-6]."""
    if not f.is_monic or f.degree < 1:
        raise ValueError("need a monic polynomial of degree >= 1")
    if any(c not in (1, -1) for c in f.coeffs[:-1]):
        raise ValueError("all non-leading coefficients must be +1 or -1")
    rs = find_roots(f)
    if not rs.converged:
        raise RootFindingError("root finding did not converge")
    return all(0.5 + 1e-6 <= abs(z) <= 2 - 1e-6 for z in rs.roots)

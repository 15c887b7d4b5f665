"""Detection of low-degree algebraic roots of monic integer polynomials.

Two independent searches are provided: exhaustive enumeration of bounded
candidate minimal polynomials (complete for a given degree/root-bound pair)
and reconstruction of candidate factors from subsets of numeric roots via
elementary symmetric functions.  Both end in exact trial division, so false
positives are impossible.  Cyclotomic, rational-root, mod-p, and structural
certificates complete the irreducibility pipeline.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import cyclotomic_factors, inverse_totient
from .intpoly import IntPoly, cauchy_root_bound, poly_divides, poly_divmod_monic, poly_eval_int
from .numtheory import factorize, first_primes, is_prime, multiplicative_order
from .roots import RootSet, find_roots, refine_roots

DEFAULT_CEILING = 10 ** 8
SUBSET_WINDOW = 0.3

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
NO_FACTOR_UP_TO = "no-factor-up-to"
UNKNOWN = "unknown"


class CeilingExceeded(Exception):
    def __init__(self, predicted: int, ceiling: int):
        super().__init__(f"candidate enumeration would need {predicted} polynomials "
                         f"(ceiling {ceiling})")
        self.predicted = predicted
        self.ceiling = ceiling


@dataclass(frozen=True)
class CandidateBox:
    """Per-degree coefficient bounds for candidate minimal polynomials of
    degree k whose roots all have modulus at most M: the coefficient of
    z^(k-j) is bounded by binom(k, j) * M^j (floored)."""
    k: int
    M: Fraction
    per_degree_bounds: tuple[int, ...]  # bound for j = 1..k

    @staticmethod
    def for_degree(k: int, M) -> "CandidateBox":
        if k < 1:
            raise ValueError("need k >= 1")
        M = Fraction(M)
        if M < 1:
            raise ValueError("need M >= 1")
        bounds = tuple(math.floor(math.comb(k, j) * M ** j) for j in range(1, k + 1))
        return CandidateBox(k, M, bounds)

    @property
    def cardinality(self) -> int:
        out = 1
        for b in self.per_degree_bounds:
            out *= 2 * b + 1
        return out


@dataclass(frozen=True)
class Factor:
    poly: IntPoly
    method: str  # enumerate | subset | cyclotomic | rational-root

    @property
    def degree(self) -> int:
        return self.poly.degree


@dataclass(frozen=True)
class FactorReport:
    status: str
    factors: tuple[Factor, ...] = ()
    k: int | None = None  # search depth for no-factor-up-to
    certificate: str | None = None

    def to_json(self) -> dict:
        out = {
            "status": self.status,
            "factors": [
                {"coeffs": fac.poly.to_json(), "degree": fac.degree, "method": fac.method}
                for fac in self.factors
            ],
        }
        if self.k is not None:
            out["k"] = self.k
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def _sorted_factors(factors) -> tuple[Factor, ...]:
    uniq = {}
    for fac in factors:
        uniq.setdefault(fac.poly, fac)
    return tuple(sorted(uniq.values(), key=lambda fac: (fac.degree, fac.poly.coeffs)))


def enumerate_candidates(k: int, M, ceiling: int = DEFAULT_CEILING):
    """Stream of all monic degree-k candidates with coefficients in the
    Lemma-style bounded box, in lexicographic coefficient order."""
    box = CandidateBox.for_degree(k, M)
    if box.cardinality > ceiling:
        raise CeilingExceeded(box.cardinality, ceiling)
    # coefficient index i = k - j has bound per_degree_bounds[k - i - 1]
    ranges = [range(-box.per_degree_bounds[k - i - 1], box.per_degree_bounds[k - i - 1] + 1)
              for i in range(k)]
    for coeffs in itertools.product(*ranges):
        yield IntPoly(tuple(coeffs) + (1,))


def candidate_count(k: int, M) -> int:
    return CandidateBox.for_degree(k, M).cardinality


def _verify_factors(f: IntPoly, factors) -> None:
    for fac in factors:
        if not poly_divides(fac.poly, f):
            raise AssertionError(f"reported factor {fac.poly} does not divide {f}")


def low_degree_factors_enumerate(f: IntPoly, k: int, M=None,
                                 ceiling: int = DEFAULT_CEILING) -> FactorReport:
    """Complete trial division of f by every bounded candidate of degree 1..k.
    Finds a factor iff one exists with all roots of modulus < M."""
    if not f.is_monic:
        raise ValueError("need a monic polynomial")
    if M is None:
        M = cauchy_root_bound(f)
    total = sum(candidate_count(l, M) for l in range(1, k + 1))
    if total > ceiling:
        raise CeilingExceeded(total, ceiling)
    f0 = poly_eval_int(f, 0)
    factors = []
    for l in range(1, k + 1):
        for h in enumerate_candidates(l, M, ceiling):
            c0 = h.coeffs[0]
            if f0 != 0:
                # a monic factor's constant term divides f(0)
                if c0 == 0 or f0 % c0 != 0:
                    continue
            if h.degree <= f.degree and poly_divides(h, f):
                factors.append(Factor(h, "enumerate"))
    factors = _sorted_factors(factors)
    _verify_factors(f, factors)
    if factors:
        return FactorReport(REDUCIBLE, factors)
    return FactorReport(NO_FACTOR_UP_TO, (), k=k)


def _subset_scan(f: IntPoly, roots, k: int, window: float):
    """Round elementary symmetric functions of every root subset of size <= k.
    Returns (verified factors, ambiguous flag)."""
    f0 = poly_eval_int(f, 0)
    n = len(roots)
    factors = []
    ambiguous = False
    for d in range(1, k + 1):
        for idx in itertools.combinations(range(n), d):
            # expand prod (z - roots[i]) in double precision
            cs = [complex(1.0)]
            for i in idx:
                r = roots[i]
                nxt = [0j] * (len(cs) + 1)
                for t, c in enumerate(cs):
                    nxt[t + 1] += c
                    nxt[t] -= r * c
                cs = nxt
            ints = []
            ok = True
            for c in cs[:-1]:
                ri = round(c.real)
                dist = max(abs(c.real - ri), abs(c.imag))
                if dist > window:
                    ok = False
                    if dist < 2 * window:
                        ambiguous = True
                    break
                if dist > 0.8 * window:
                    ambiguous = True
                ints.append(int(ri))
            if not ok:
                continue
            h = IntPoly(tuple(ints) + (1,))
            c0 = h.coeffs[0]
            if f0 != 0 and (c0 == 0 or f0 % c0 != 0):
                continue
            if poly_divides(h, f):
                factors.append(Factor(h, "subset"))
    return factors, ambiguous


def low_degree_factors_subset(f: IntPoly, k: int, window: float = SUBSET_WINDOW) -> FactorReport:
    """Factor search by reconstructing candidate factors from subsets of the
    numeric roots.  Escalates root precision when the rounding is ambiguous;
    returns Unknown only if the escalation fails too."""
    if not f.is_monic:
        raise ValueError("need a monic polynomial")
    k = min(k, f.degree)
    rs = find_roots(f)
    if not rs.converged:
        # escalate straight away; the refined scan is definitive
        roots = _refined_roots(f, rs)
        if roots is None:
            return FactorReport(UNKNOWN)
        factors, _ = _subset_scan(f, roots, k, window)
    else:
        factors, ambiguous = _subset_scan(f, rs.roots, k, window)
        if ambiguous or rs.clustered:
            # borderline roundings: redo the scan at high precision, where a
            # non-integer distance is a definite rejection, not ambiguity
            roots = _refined_roots(f, rs)
            if roots is None:
                return FactorReport(UNKNOWN)
            factors, _ = _subset_scan(f, roots, k, window)
    factors = _sorted_factors(factors)
    _verify_factors(f, factors)
    if factors:
        return FactorReport(REDUCIBLE, factors)
    return FactorReport(NO_FACTOR_UP_TO, (), k=k)


def _refined_roots(f: IntPoly, rs: RootSet):
    refined = refine_roots(f, rs.roots)
    roots = [complex(z) for z in refined]
    # sanity: refined roots must actually be roots
    scale = sum(abs(c) for c in f.coeffs)
    for z in roots:
        if abs(f.eval_complex(z)) > 1e-6 * scale * max(1.0, abs(z)) ** f.degree:
            return None
    return roots


def rational_root_factors(f: IntPoly) -> list[IntPoly]:
    """All linear factors z - r with integer r; complete for degree-1 factors
    (rational roots of a monic integer polynomial are integers dividing f(0))."""
    if not f.is_monic:
        raise ValueError("need a monic polynomial")
    out = []
    f0 = poly_eval_int(f, 0)
    if f0 == 0:
        out.append(IntPoly.of(0, 1))
        g = f
        while poly_eval_int(g, 0) == 0 and g.degree > 0:
            g, _ = poly_divmod_monic(g, IntPoly.of(0, 1))
        f0 = poly_eval_int(g, 0)
        f = g
        if f.degree == 0:
            return out
    bound = int(cauchy_root_bound(f)) if f.degree >= 1 else 0
    if bound and 2 * bound <= 200_000:
        candidates = [r for r in range(-bound, bound + 1) if r != 0 and f0 % r == 0]
    else:
        divs = _divisors_abs(abs(f0))
        candidates = sorted(set(d for r in divs for d in (r, -r) if abs(d) <= bound))
    for r in candidates:
        if poly_eval_int(f, r) == 0:
            out.append(IntPoly.of(-r, 1))
    return sorted(out, key=lambda h: h.coeffs)


def _divisors_abs(m: int) -> list[int]:
    divs = [1]
    for p, e in factorize(m):
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


# ---------------------------------------------------------------------------
# GF(p)[x] helpers (dense ascending coefficient lists)

def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    if len(a) - 1 < db:
        return [], _gf_trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = (a[i + db] * inv) % p
        if c:
            q[i] = c
            for j in range(db + 1):
                a[i + j] = (a[i + j] - c * b[j]) % p
    return _gf_trim(q), _gf_trim(a[:db])


def _gf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        _, r = _gf_divmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _gf_mulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    _, r = _gf_divmod(out, f, p)
    return r


def _gf_powmod(base, e, f, p):
    result = [1]
    b = list(base)
    while e:
        if e & 1:
            result = _gf_mulmod(result, b, f, p)
        b = _gf_mulmod(b, b, f, p)
        e >>= 1
    return result


def modp_irreducibility_certificate(f: IntPoly, primes) -> int | None:
    """First prime p for which f mod p is squarefree and irreducible (by the
    x^(p^n) = x test plus gcd checks for every prime divisor of n); a returned
    prime certifies irreducibility over the integers by Gauss's lemma.
    None is a valid outcome."""
    if not f.is_monic or f.degree < 1:
        raise ValueError("need a monic polynomial of degree >= 1")
    n = f.degree
    if n == 1:
        return primes[0] if primes else None
    prime_divs = [p for p, _ in factorize(n)]
    for p in primes:
        fp = _gf_trim([c % p for c in f.coeffs])
        if len(fp) - 1 != n:
            continue
        dfp = _gf_trim([(i * c) % p for i, c in enumerate(fp)][1:])
        if not dfp or len(_gf_gcd(fp, dfp, p)) - 1 != 0:
            continue  # not squarefree mod p: this prime cannot certify
        x = [0, 1]
        frob = [x]  # frob[i] = x^(p^i) mod fp
        t = x
        ok = True
        for _ in range(n):
            t = _gf_powmod(t, p, fp, p)
            frob.append(t)
        if frob[n] != x:
            continue
        for ell in prime_divs:
            diff = list(frob[n // ell])
            while len(diff) < 2:
                diff.append(0)
            diff[1] = (diff[1] - 1) % p
            diff = _gf_trim(diff)
            if not diff or len(_gf_gcd(diff, fp, p)) - 1 != 0:
                ok = False
                break
        if ok:
            return p
    return None


def rademacher_structural_certificate(n: int) -> bool:
    """True iff n+1 is prime and 2 generates (Z/(n+1))^*: then every monic
    degree-n polynomial with +-1 coefficients is irreducible."""
    if n < 1:
        raise ValueError("need n >= 1")
    m = n + 1
    if not is_prime(m):
        return False
    if m == 2:
        return n == 1
    return multiplicative_order(2, m) == n


def _is_pm1(f: IntPoly) -> bool:
    return f.is_monic and all(c in (1, -1) for c in f.coeffs[:-1])


def classify_irreducibility(f: IntPoly, effort: str = "full",
                            primes_count: int = 25,
                            ceiling: int = DEFAULT_CEILING) -> FactorReport:
    """Irreducibility pipeline: structural certificate for +-1 inputs, rational
    roots, cyclotomic factors, mod-p certificate, then subset search up to
    floor(deg/2).  Irreducible is only returned with a certificate or after a
    completed complete search; Reducible always carries a verified factor."""
    if not f.is_monic or f.degree < 1:
        raise ValueError("need a monic polynomial of degree >= 1")
    n = f.degree
    if n == 1:
        return FactorReport(IRREDUCIBLE, certificate="degree-1")
    if _is_pm1(f) and rademacher_structural_certificate(n):
        return FactorReport(IRREDUCIBLE, certificate="structural")
    linear = rational_root_factors(f)
    if linear:
        return FactorReport(REDUCIBLE,
                            _sorted_factors(Factor(h, "rational-root") for h in linear))
    if n <= 3:
        # reducible would require a linear factor; the degree-1 search is complete
        return FactorReport(IRREDUCIBLE, certificate="complete-search")
    cyc = cyclotomic_factors(f, n - 1)
    if cyc:
        return FactorReport(REDUCIBLE,
                            _sorted_factors(Factor(phi, "cyclotomic") for _, phi in cyc))
    p = modp_irreducibility_certificate(f, first_primes(primes_count))
    if p is not None:
        return FactorReport(IRREDUCIBLE, certificate=f"mod-{p}")
    if effort == "fast":
        return FactorReport(UNKNOWN)
    report = low_degree_factors_subset(f, n // 2)
    if report.status == REDUCIBLE:
        return report
    if report.status == NO_FACTOR_UP_TO:
        # complete: any nontrivial factorization has a factor of degree <= n/2
        return FactorReport(IRREDUCIBLE, certificate="complete-search")
    return FactorReport(UNKNOWN)

"""Exact and log-space evaluation of the closed-form bounds and counts:
candidate-set cardinalities and their sandwich bounds, the main probability
budget, the collected parameter-regime checks, the finite-field irreducible
count, and the exact root-at-+-1 probabilities."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .numtheory import divisors, euler_phi, mobius, prime_power_decompose

__all__ = [
    "product_bound", "sum_bound", "lemma_sandwich", "theorem_budget",
    "collected_bounds_check", "ff_irreducible_count", "mobius", "euler_phi",
    "lo_exact_pm1", "figure_lower_bound", "BoundReport",
]


@dataclass(frozen=True)
class BoundReport:
    name: str
    log_value: float
    exact: Fraction | None
    verdicts: dict

    def to_json(self) -> dict:
        out = {"name": self.name, "log_value": self.log_value, "verdicts": dict(self.verdicts)}
        if self.exact is not None:
            out["exact"] = {"numerator": str(self.exact.numerator),
                            "denominator": str(self.exact.denominator)}
        return out


def product_bound(k: int, M) -> Fraction:
    """Exact value of prod_{j=1..k} (2*binom(k,j)*M^j + 1)."""
    if k < 1:
        raise ValueError("need k >= 1")
    M = Fraction(M)
    if M < 1:
        raise ValueError("need M >= 1")
    out = Fraction(1)
    for j in range(1, k + 1):
        out *= 2 * math.comb(k, j) * M ** j + 1
    return out


def sum_bound(k: int, M) -> Fraction:
    """Exact value of sum_{l=1..k} l * prod_{j=1..l} (2*binom(l,j)*M^j + 1)."""
    if k < 2:
        raise ValueError("need k >= 2")
    return Fraction(sum(l * product_bound(l, M) for l in range(1, k + 1)))


def _log_fraction(x: Fraction) -> mpmath.mpf:
    return mpmath.log(x.numerator) - mpmath.log(x.denominator)


def lemma_sandwich(k: int, M) -> dict:
    """Verdicts for the sandwich around the candidate-count product:
    M^((k^2+k)/2) * e^((k^2 - k ln k)/2)  <=  product  <=  (eM)^((k^2+k)/2),
    plus sum <= (eM)^(k^2); at k = 1 the product upper bound is 3M."""
    M = Fraction(M)
    prod = product_bound(k, M)
    with mpmath.workdps(60):
        log_prod = _log_fraction(prod)
        log_m = _log_fraction(M)
        if k == 1:
            upper_ok = prod <= 3 * M
            return {"k": k, "product": prod, "upper_ok": bool(upper_ok)}
        half = mpmath.mpf(k * k + k) / 2
        log_upper = half * (1 + log_m)
        log_lower = half * log_m + (mpmath.mpf(k * k) - k * mpmath.log(k)) / 2
        s = sum_bound(k, M)
        log_sum = _log_fraction(s)
        return {
            "k": k,
            "product": prod,
            "sum": s,
            "lower_ok": bool(log_lower <= log_prod),
            "upper_ok": bool(log_prod <= log_upper),
            "sum_ok": bool(log_sum <= k * k * (1 + log_m)),
        }


def theorem_budget(p: float, M: float, k: int, tail: float) -> float:
    """Probability budget for a degree <= k algebraic root in a region of
    radius M: p*(eM)^(k^2) + tail for k >= 2, and p*(3M) + tail for k = 1,
    clamped to [0, 1].  Evaluated in log space to avoid overflow."""
    if not (0 <= p <= 1 and 0 <= tail <= 1):
        raise ValueError("p and tail must be probabilities")
    if M < 1 or k < 1:
        raise ValueError("need M >= 1 and k >= 1")
    if p == 0:
        main = 0.0
    elif k == 1:
        main = 3 * M * p
    else:
        log_main = math.log(p) + k * k * (1 + math.log(M))
        main = math.exp(log_main) if log_main < 0 else math.inf
    return min(1.0, main + tail)


def collected_bounds_check(case: str, params: dict, n: int) -> dict:
    """Concrete-n verdicts for the collected parameter regimes of the
    p*(eM)^(k^2) budget.  Asymptotic claims are checked as finite predicates;
    case (iii) additionally reports the smallest n >= 8 where its inequality
    first holds."""
    if n < 2:
        raise ValueError("need n >= 2")
    ln = math.log(n)
    if case == "i":
        p = params.get("p", 1.0 / math.sqrt(n))
        k = params.get("k", max(1, math.floor(math.sqrt(ln / 4))))
        if k > math.sqrt(ln / 4):
            raise ValueError("case (i) requires k <= sqrt(log n / 4)")
        log_value = math.log(p) + k * k * (1 + math.log(2))
        return {"case": case, "n": n, "k": k, "M": 2, "log_value": log_value,
                "holds": log_value < 0}
    if case == "ii":
        eps = params["epsilon"]
        if not 0 < eps < 0.5:
            raise ValueError("need 0 < epsilon < 1/2")
        delta = params.get("delta", 0.1)
        k = max(1, math.floor(n ** (0.5 - eps)))
        log_value = n * math.log(1 / math.sqrt(2)) + k * k * (1 + ln)
        # (1/sqrt2 + o(1))^n as a finite predicate: per-n rate within delta
        holds = log_value / n <= math.log(1 / math.sqrt(2) + delta)
        return {"case": case, "n": n, "k": k, "M": n, "log_value": log_value,
                "holds": holds}
    if case == "iii":
        c, cp, C = params["c"], params["cp"], params.get("C", 1.0)
        if not (0 < c < 1 and 0 < cp < c / 2 and C > 0):
            raise ValueError("need 0 < c < 1, cp < c/2, C > 0")

        def log_value_at(nn):
            k = max(1, math.floor(nn ** cp))
            return (math.log(2) - nn ** c
                    + k * k * (1 + math.log(C) + 0.5 * math.log(nn)))

        def holds_at(nn):
            return log_value_at(nn) <= math.log(2) - (2.0 / 3.0) * nn ** c

        threshold = None
        nn = 8
        while nn <= 10 ** 9:
            if holds_at(nn):
                threshold = nn
                break
            nn = max(nn + 1, int(nn * 1.25))
        return {"case": case, "n": n, "log_value": log_value_at(n),
                "holds": holds_at(n), "threshold": threshold}
    if case == "iv":
        B, m, k = params["B"], params["m"], params["K"]
        if B <= 0 or m < 1 or k < 1:
            raise ValueError("need B > 0, m >= 1, K >= 1")
        Bp = B + 2 * m * k * k
        log_value = -Bp * ln + k * k * (1 + m * ln)
        return {"case": case, "n": n, "B": B, "Bprime": Bp, "M": n ** m,
                "log_value": log_value, "holds": log_value <= -B * ln}
    raise ValueError(f"unknown case {case!r}")


def ff_irreducible_count(q: int, n: int) -> int:
    """Number of monic irreducible degree-n polynomials over the field with q
    elements: (1/n) * sum_{d | n} mu(d) * q^(n/d)."""
    prime_power_decompose(q)  # validates q
    if n < 1:
        raise ValueError("need n >= 1")
    total = sum(mobius(d) * q ** (n // d) for d in divisors(n))
    quo, rem = divmod(total, n)
    assert rem == 0
    return quo


def lo_exact_pm1(n: int, x: int) -> Fraction:
    """Exact P(f(x) = 0) at x = +-1 for the monic degree-n polynomial with
    iid +-1 lower coefficients: binom(n, (n-1)/2) / 2^n for odd n, else 0."""
    if n < 1:
        raise ValueError("need n >= 1")
    if x not in (1, -1):
        raise ValueError("x must be +1 or -1")
    if n % 2 == 0:
        return Fraction(0)
    return Fraction(math.comb(n, (n - 1) // 2), 2 ** n)


def figure_lower_bound(n: int) -> float:
    """Asymptotic lower bound for the reducibility probability at odd degree:
    2*sqrt(2 / (pi*(n+1))) - 4 / (pi*(n+1))."""
    if n % 2 == 0:
        raise ValueError("need odd n")
    return 2 * math.sqrt(2 / (math.pi * (n + 1))) - 4 / (math.pi * (n + 1))

"""Exhaustive and Monte Carlo measurement harness.

Trials are distributed over fixed-size blocks of 1024, one counter-based RNG
stream per block, so results are reproducible bit-for-bit regardless of how
the work is scheduled.  Statistics are always evaluated in exact integer
arithmetic; floating point only enters through Wilson intervals and the
region-membership test for numeric roots.
"""
from __future__ import annotations

import concurrent.futures
import csv
import io
import itertools
import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .bounds import theorem_budget
from .ensembles import (EnsembleSpec, ErdosRenyi, FixedOutdegree, IidSignMatrix,
                        RademacherPoly, SeedStream, SymmetricBounded,
                        UniformPoly, ZeroOneKonyagin, sample_block,
                        spec_from_json, spec_to_json)
from .factor import (IRREDUCIBLE, REDUCIBLE, classify_irreducibility, enumerate_candidates,
                     low_degree_factors_subset, rademacher_structural_certificate,
                     rational_root_factors)
from .intmatrix import IntMatrix, mat_charpoly_exact, mat_det_exact
from .intpoly import IntPoly, cauchy_root_bound, poly_divides, poly_divmod_monic, poly_eval_int
from .roots import find_roots

BLOCK = 1024
_Z95 = 1.959963984540054


@dataclass(frozen=True)
class RegionSpec:
    """Disk of radius M, optionally minus some integer points and optionally
    restricted to the real line (for symmetric ensembles)."""
    M: float
    excluded: tuple[int, ...] = ()
    real_line_only: bool = False

    def __post_init__(self):
        if self.M <= 0:
            raise ValueError("need M > 0")
        if any(abs(x) > self.M for x in self.excluded):
            raise ValueError("excluded points must have modulus <= M")

    def contains_int(self, r: int) -> bool:
        return abs(r) <= self.M + 1e-9 and r not in self.excluded

    def contains_numeric(self, z: complex) -> bool:
        if abs(z) > self.M + 1e-9:
            return False
        if self.real_line_only and abs(z.imag) > 1e-6:
            return False
        return all(abs(z - x) > 1e-6 for x in self.excluded)


# --- statistics ------------------------------------------------------------

@dataclass(frozen=True)
class Reducible:
    name = "reducible"
    needs_poly = True


@dataclass(frozen=True)
class HasFactorDegAtMost:
    k: int
    needs_poly = True

    @property
    def name(self) -> str:
        return f"has-factor-le-{self.k}"


@dataclass(frozen=True)
class IntegerPointRoot:
    x: int
    needs_poly = True

    @property
    def name(self) -> str:
        return f"root-at-{self.x}"


@dataclass(frozen=True)
class MinPolyDivides:
    g: IntPoly
    needs_poly = True

    @property
    def name(self) -> str:
        return f"divides-[{','.join(self.g.to_json())}]"


@dataclass(frozen=True)
class Singular:
    name = "singular"
    needs_poly = False


@dataclass(frozen=True)
class TrivialEigenvalueMultiplicityAtLeast2:
    s: int
    needs_poly = True

    @property
    def name(self) -> str:
        return f"eigenvalue-{self.s}-mult-ge-2"


Statistic = (Reducible | HasFactorDegAtMost | IntegerPointRoot | MinPolyDivides
             | Singular | TrivialEigenvalueMultiplicityAtLeast2)


@dataclass(frozen=True)
class ExperimentConfig:
    spec: EnsembleSpec
    statistic: Statistic
    trials: int
    seed: int
    region: RegionSpec | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("need trials >= 1")
        if isinstance(self.statistic, Singular) and not self.spec.is_matrix:
            raise ValueError("the singularity statistic needs a matrix ensemble")
        if isinstance(self.statistic, TrivialEigenvalueMultiplicityAtLeast2) \
                and not self.spec.is_matrix:
            raise ValueError("the trivial-eigenvalue statistic needs a matrix ensemble")


@dataclass(frozen=True)
class EstimateRecord:
    model: str
    n: int
    statistic: str
    k: int | None
    M: float | None
    trials: int
    successes: int
    p_hat: float
    ci_lo: float
    ci_hi: float
    seed: int
    seconds: float

    def to_json(self) -> dict:
        return {
            "model": self.model, "n": self.n, "statistic": self.statistic,
            "k": self.k, "M": self.M, "trials": self.trials,
            "successes": self.successes, "p_hat": self.p_hat,
            "ci_lo": self.ci_lo, "ci_hi": self.ci_hi,
            "seed": self.seed, "seconds": self.seconds,
        }


def wilson_interval(successes: int, trials: int, z: float = _Z95) -> tuple[float, float]:
    """Score-based 95% binomial interval; stable near success probability 0."""
    if trials < 1:
        raise ValueError("need trials >= 1")
    phat = successes / trials
    z2 = z * z
    denom = 1 + z2 / trials
    center = (phat + z2 / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z2 / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def _has_low_degree_root(f: IntPoly, k: int, region: RegionSpec | None) -> bool:
    """Exact-core test for an algebraic root of degree <= k in the region."""
    for h in rational_root_factors(f):
        r = -h.coeffs[0]
        if region is None or region.contains_int(r):
            return True
    if k < 2:
        return False
    report = low_degree_factors_subset(f, k)
    for fac in report.factors:
        if fac.degree < 2:
            continue
        if region is None:
            return True
        rs = find_roots(fac.poly)
        if any(region.contains_numeric(z) for z in rs.roots):
            return True
    return False


def evaluate_statistic(stat: Statistic, value, region: RegionSpec | None) -> bool:
    """value is the sampled IntPoly or IntMatrix; matrix samples are reduced
    to their characteristic polynomial when the statistic needs one."""
    if isinstance(stat, Singular):
        return mat_det_exact(value) == 0
    f = mat_charpoly_exact(value) if isinstance(value, IntMatrix) else value
    if isinstance(stat, IntegerPointRoot):
        return poly_eval_int(f, stat.x) == 0
    if isinstance(stat, MinPolyDivides):
        return poly_divides(stat.g, f)
    if isinstance(stat, TrivialEigenvalueMultiplicityAtLeast2):
        lin = IntPoly.of(-stat.s, 1)
        if not poly_divides(lin, f):
            return False
        q, _ = poly_divmod_monic(f, lin)
        return poly_divides(lin, q)
    if isinstance(stat, Reducible):
        return classify_irreducibility(f).status == REDUCIBLE
    if isinstance(stat, HasFactorDegAtMost):
        return _has_low_degree_root(f, stat.k, region)
    raise TypeError(f"unknown statistic {stat!r}")


def _block_successes(config: ExperimentConfig, block_index: int, count: int) -> int:
    g = SeedStream(config.seed).child(block_index).generator()
    return sum(1 for value in sample_block(config.spec, g, count)
               if evaluate_statistic(config.statistic, value, config.region))


def mc_estimate(config: ExperimentConfig, workers: int = 1) -> EstimateRecord:
    """Monte Carlo estimate of P(statistic) with a Wilson 95% interval.  One
    RNG stream per 1024-trial block, so the result is identical for any number
    of workers."""
    start = time.perf_counter()
    blocks = []
    done = 0
    while done < config.trials:
        count = min(BLOCK, config.trials - done)
        blocks.append((len(blocks), count))
        done += count
    if workers > 1 and len(blocks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            successes = sum(pool.map(_block_successes, itertools.repeat(config),
                                     *zip(*blocks)))
    else:
        successes = sum(_block_successes(config, i, c) for i, c in blocks)
    lo, hi = wilson_interval(successes, config.trials)
    stat = config.statistic
    return EstimateRecord(
        model=config.spec.model, n=config.spec.n, statistic=stat.name,
        k=getattr(stat, "k", None),
        M=config.region.M if config.region else None,
        trials=config.trials, successes=successes,
        p_hat=successes / config.trials, ci_lo=lo, ci_hi=hi,
        seed=config.seed, seconds=time.perf_counter() - start)


# --- exhaustive Rademacher census ------------------------------------------

@dataclass(frozen=True)
class CensusResult:
    n: int
    total: int
    reducible: int
    by_smallest_factor_degree: dict

    @property
    def probability(self) -> Fraction:
        return Fraction(self.reducible, self.total)

    def to_json(self) -> dict:
        return {
            "n": self.n, "total": self.total, "reducible": self.reducible,
            "probability": [str(self.probability.numerator), str(self.probability.denominator)],
            "by_smallest_factor_degree": {str(k): v for k, v
                                          in sorted(self.by_smallest_factor_degree.items())},
        }


def exhaustive_reducibility(n: int) -> CensusResult:
    """Exact reducibility census over all 2^n monic +-1 polynomials of degree n,
    with a breakdown by smallest factor degree."""
    if not 1 <= n <= 14:
        raise ValueError("census supports 1 <= n <= 14")
    total = 2 ** n
    if rademacher_structural_certificate(n):
        return CensusResult(n, total, 0, {})
    breakdown: dict[int, int] = {}
    reducible = 0
    for signs in itertools.product((-1, 1), repeat=n):
        f = IntPoly(signs + (1,))
        if poly_eval_int(f, 1) == 0 or poly_eval_int(f, -1) == 0:
            d = 1
        else:
            report = classify_irreducibility(f)
            if report.status != REDUCIBLE:
                if report.status != IRREDUCIBLE:
                    raise AssertionError(f"census could not classify {f}")
                continue
            # smallest factor degree: a reducible degree-n polynomial always
            # has a factor of degree <= n/2, and the subset search is complete
            # in that range
            full = low_degree_factors_subset(f, n // 2)
            factors = full.factors if full.status == REDUCIBLE else report.factors
            d = min(fac.degree for fac in factors)
        reducible += 1
        breakdown[d] = breakdown.get(d, 0) + 1
    return CensusResult(n, total, reducible, breakdown)


def exhaustive_root_at_pm1(n: int) -> Fraction:
    """Exact P(f(1) = 0 or f(-1) = 0) over all 2^n sign vectors."""
    if not 1 <= n <= 20:
        raise ValueError("need 1 <= n <= 20")
    hits = 0
    for signs in itertools.product((-1, 1), repeat=n):
        f = IntPoly(signs + (1,))
        if poly_eval_int(f, 1) == 0 or poly_eval_int(f, -1) == 0:
            hits += 1
    return Fraction(hits, 2 ** n)


def exhaustive_singularity(n: int) -> Fraction:
    """Exact P(n x n +-1 matrix is singular) by full enumeration (n <= 3)."""
    if not 1 <= n <= 3:
        raise ValueError("exhaustive singularity oracle supports n <= 3")
    hits = 0
    total = 0
    for entries in itertools.product((-1, 1), repeat=n * n):
        total += 1
        if mat_det_exact(IntMatrix(n, entries)) == 0:
            hits += 1
    return Fraction(hits, total)


# --- delocalization profile -------------------------------------------------

@dataclass(frozen=True)
class ProfileResult:
    trials: int
    records: tuple  # (candidate IntPoly, successes)
    p_max: float
    argmax: IntPoly | None

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "candidates": [{"coeffs": g.to_json(), "successes": s}
                           for g, s in self.records],
            "p_max": self.p_max,
            "argmax": self.argmax.to_json() if self.argmax else None,
        }


def _candidates_up_to(k: int, M) -> list[IntPoly]:
    out = []
    for d in range(1, k + 1):
        out.extend(enumerate_candidates(d, M))
    return out


def delocalization_profile(spec: EnsembleSpec, k: int, M, trials: int,
                           seed: int = 0) -> ProfileResult:
    """Per-candidate estimates of P(g divides f) over all bounded candidates of
    degree <= k, evaluated on shared samples; the max is the empirical
    pointwise-delocalization parameter."""
    candidates = _candidates_up_to(k, M)
    counts = [0] * len(candidates)
    stream = SeedStream(seed)
    done = 0
    block_index = 0
    while done < trials:
        count = min(BLOCK, trials - done)
        g = stream.child(block_index).generator()
        for value in sample_block(spec, g, count):
            f = mat_charpoly_exact(value) if isinstance(value, IntMatrix) else value
            f0 = poly_eval_int(f, 0)
            for i, cand in enumerate(candidates):
                c0 = cand.coeffs[0]
                if f0 != 0 and (c0 == 0 or f0 % c0 != 0):
                    continue
                if cand.degree <= f.degree and poly_divides(cand, f):
                    counts[i] += 1
        done += count
        block_index += 1
    best = max(range(len(candidates)), key=lambda i: counts[i], default=None)
    p_max = counts[best] / trials if best is not None else 0.0
    return ProfileResult(trials, tuple(zip(candidates, counts)), p_max,
                         candidates[best] if best is not None else None)


# --- main-theorem validation -------------------------------------------------

def validate_main_theorem(spec: EnsembleSpec, k: int, trials: int,
                          seed: int = 0, M=None,
                          excluded: tuple[int, ...] = ()) -> dict:
    """Measures both sides of the degree <= k root-probability budget on one
    ensemble.  The verdict must hold on every run: the empirical frequency is a
    union over bounded candidates, and the budget dominates the union bound.

    For polynomial ensembles M defaults to the max per-sample Cauchy bound
    (tail = 0 by construction); for matrix ensembles M defaults to n with the
    tail measured by root-modulus exceedances."""
    stream = SeedStream(seed)
    samples = []
    done = 0
    block_index = 0
    while done < trials:
        count = min(BLOCK, trials - done)
        g = stream.child(block_index).generator()
        for value in sample_block(spec, g, count):
            samples.append(mat_charpoly_exact(value)
                           if isinstance(value, IntMatrix) else value)
        done += count
        block_index += 1

    tail_count = 0
    if M is None:
        if spec.is_matrix:
            M = float(spec.n)
            for f in samples:
                rs = find_roots(f)
                if rs.converged and max(abs(z) for z in rs.roots) > M:
                    tail_count += 1
        else:
            M = float(max(cauchy_root_bound(f) for f in samples))
    else:
        M = float(M)
        for f in samples:
            rs = find_roots(f)
            if rs.converged and max(abs(z) for z in rs.roots) > M:
                tail_count += 1
    tail = tail_count / trials

    region = RegionSpec(M, tuple(excluded))
    candidates = []
    for cand in _candidates_up_to(k, M):
        if cand.degree == 1:
            if region.contains_int(-cand.coeffs[0]):
                candidates.append(cand)
        else:
            rs = find_roots(cand)
            if any(region.contains_numeric(z) for z in rs.roots):
                candidates.append(cand)

    counts = [0] * len(candidates)
    event_count = 0
    for f in samples:
        f0 = poly_eval_int(f, 0)
        hit = False
        for i, cand in enumerate(candidates):
            c0 = cand.coeffs[0]
            if f0 != 0 and (c0 == 0 or f0 % c0 != 0):
                continue
            if cand.degree <= f.degree and poly_divides(cand, f):
                counts[i] += 1
                hit = True
        if hit:
            event_count += 1

    p_hat = max(counts) / trials if counts else 0.0
    empirical = event_count / trials
    budget = theorem_budget(p_hat, max(M, 1.0), k, tail)
    return {
        "model": spec.model, "n": spec.n, "k": k, "M": M, "trials": trials,
        "seed": seed, "excluded": list(excluded),
        "empirical": empirical, "p_hat": p_hat, "tail": tail,
        "budget": budget, "holds": empirical <= budget + 1e-12,
    }


# Fixed validation matrix: (spec, k, excluded integer points).  Covers both
# polynomial models and matrix models; fixed-outdegree rows exclude the
# deterministic eigenvalue s from the region.
STANDARD_CONFIGS = (
    (RademacherPoly(8), 1, ()),
    (RademacherPoly(8), 2, ()),
    (RademacherPoly(12), 1, ()),
    (RademacherPoly(12), 2, ()),
    (ZeroOneKonyagin(8), 1, ()),
    (ZeroOneKonyagin(8), 2, ()),
    (UniformPoly(8, 2), 1, ()),
    (IidSignMatrix(6), 1, ()),
    (SymmetricBounded(6), 1, ()),
    (ErdosRenyi(6, 0.5), 1, ()),
    (FixedOutdegree(6, 2), 1, (2,)),
    (FixedOutdegree(6, 3), 1, (3,)),
)


# --- report output ----------------------------------------------------------

CSV_COLUMNS = ["model", "n", "statistic", "k", "M", "trials", "successes",
               "p_hat", "ci_lo", "ci_hi", "seed", "seconds"]


def render_report(records, format: str) -> str:
    rows = [r.to_json() if isinstance(r, EstimateRecord) else dict(r) for r in records]
    if format == "json":
        return json.dumps(rows, indent=2) + "\n"
    if format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({c: ("" if row.get(c) is None else row.get(c)) for c in CSV_COLUMNS})
        return buf.getvalue()
    raise ValueError(f"unknown format {format!r}")


def emit_report(records, format: str, path: str) -> None:
    text = render_report(records, format)
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc


def config_from_json(data: dict) -> ExperimentConfig:
    spec = spec_from_json(data["spec"])
    stat_data = dict(data["statistic"])
    kind = stat_data.pop("kind")
    stat: Statistic
    if kind == "reducible":
        stat = Reducible()
    elif kind == "has-factor":
        stat = HasFactorDegAtMost(int(stat_data["k"]))
    elif kind == "integer-root":
        stat = IntegerPointRoot(int(stat_data["x"]))
    elif kind == "minpoly-divides":
        stat = MinPolyDivides(IntPoly.from_json(stat_data["g"]))
    elif kind == "singular":
        stat = Singular()
    elif kind == "trivial-eigenvalue-mult2":
        stat = TrivialEigenvalueMultiplicityAtLeast2(int(stat_data["s"]))
    else:
        raise ValueError(f"unknown statistic kind {kind!r}")
    region = None
    if "region" in data and data["region"] is not None:
        r = data["region"]
        region = RegionSpec(float(r["M"]), tuple(r.get("excluded", ())),
                            bool(r.get("real_line_only", False)))
    return ExperimentConfig(spec=spec, statistic=stat,
                            trials=int(data["trials"]), seed=int(data["seed"]),
                            region=region)

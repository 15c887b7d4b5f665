"""Acceptance gate: twelve exact-oracle / property criteria at desk scale.

Each test prints one pass line with its runtime and asserts both the
mathematical claim and the wall-clock budget.
"""
import itertools
import math
import time
from fractions import Fraction

from polylab import (IntMatrix, IntPoly, annulus_check, ff_irreducible_count,
                     lemma_sandwich, lo_exact_pm1, mat_charpoly_exact,
                     mc_estimate, poly_divides, product_bound, sum_bound,
                     validate_main_theorem, wilson_interval)
from polylab.control import all_graphs, godsil_cross_check
from polylab.ensembles import FixedOutdegree, RademacherPoly, SeedStream, sample
from polylab.experiments import (STANDARD_CONFIGS, ExperimentConfig,
                                 IntegerPointRoot, Singular,
                                 exhaustive_reducibility, exhaustive_root_at_pm1,
                                 exhaustive_singularity)
from polylab.factor import (candidate_count, enumerate_candidates,
                            low_degree_factors_enumerate,
                            low_degree_factors_subset)
from test_bounds import _brute_count


class _Budget:
    def __init__(self, label, seconds):
        self.label = label
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is None:
            assert elapsed < self.seconds, \
                f"{self.label}: {elapsed:.1f}s exceeded the {self.seconds}s budget"
            print(f"[acceptance] {self.label}: PASS ({elapsed:.1f}s)")
        else:
            print(f"[acceptance] {self.label}: FAIL ({elapsed:.1f}s)")
        return False


def test_c01_finite_field_count_matches_brute_force():
    with _Budget("01 finite-field count", 1.0):
        for q in (2, 3):
            for n in range(1, 7):
                assert ff_irreducible_count(q, n) == _brute_count(q, n)
        assert ff_irreducible_count(2, 4) == 3
        assert ff_irreducible_count(3, 3) == 8


def test_c02_reducibility_census():
    with _Budget("02 reducibility census", 300.0):
        results = {n: exhaustive_reducibility(n) for n in range(1, 13)}
        assert results[2].probability == 0
        assert results[4].probability == 0
        assert results[3].probability == Fraction(1, 2)
        # independent oracle at n = 3: degree-3 reducible <=> integer root,
        # and the only possible integer roots of a +-1 polynomial are +-1
        oracle = sum(1 for s in itertools.product((-1, 1), repeat=3)
                     if sum(s) + 1 == 0 or -s[0] + s[1] - s[2] + 1 == 0)
        assert results[3].reducible == oracle == 4
        # exact inclusion-exclusion lower bound from the root-at-+-1 events
        # (n >= 2: at degree 1 a root at +-1 does not make the poly reducible)
        for n, res in results.items():
            if n >= 2:
                assert res.probability >= exhaustive_root_at_pm1(n)


def test_c03_annulus_exhaustive_degree_12():
    with _Budget("03 root annulus", 120.0):
        for signs in itertools.product((-1, 1), repeat=12):
            assert annulus_check(IntPoly(signs + (1,)))


def test_c04_candidate_count_sandwich():
    with _Budget("04 count sandwich", 1.0):
        for k in range(2, 13):
            for M in (1, 2, 5, 10):
                v = lemma_sandwich(k, M)
                assert v["lower_ok"] and v["upper_ok"] and v["sum_ok"], (k, M)
                # re-assert the exact big-rational inequalities via the values
                assert v["product"] == product_bound(k, M)
                assert v["sum"] == sum_bound(k, M)
        for M in (1, 2, 5, 10):
            assert 2 * M + 1 <= 3 * M
            assert lemma_sandwich(1, M)["upper_ok"]


def test_c05_candidate_cardinality():
    with _Budget("05 candidate cardinality", 10.0):
        expected = {(1, 1): 3, (2, 1): 15, (2, 2): 81, (3, 2): 5525}
        for (k, M), count in expected.items():
            formula = math.prod(2 * math.floor(math.comb(k, j) * M ** j) + 1
                                for j in range(1, k + 1))
            assert count == formula
            assert candidate_count(k, M) == count
            assert sum(1 for _ in enumerate_candidates(k, M)) == count


def test_c06_point_probability_coverage():
    with _Budget("06 point-probability coverage", 120.0):
        exact = float(lo_exact_pm1(11, 1))
        assert lo_exact_pm1(11, 1) == Fraction(462, 2048)
        covered = 0
        for rep in range(100):
            r = mc_estimate(ExperimentConfig(RademacherPoly(11),
                                             IntegerPointRoot(1), 10 ** 5,
                                             1000 + rep))
            if r.ci_lo <= exact <= r.ci_hi:
                covered += 1
        assert covered >= 93, f"coverage {covered}/100"


def test_c07_singularity_oracle():
    with _Budget("07 singularity oracle", 60.0):
        from polylab.ensembles import IidSignMatrix
        for n, trials in ((2, 40_000), (3, 40_000)):
            exact = float(exhaustive_singularity(n))
            r = mc_estimate(ExperimentConfig(IidSignMatrix(n), Singular(),
                                             trials, 17))
            sigma = math.sqrt(exact * (1 - exact) / trials)
            assert abs(r.p_hat - exact) <= 3 * sigma, (n, r.p_hat, exact)
        assert exhaustive_singularity(2) == Fraction(1, 2)


def test_c08_permutation_charpoly_all_n_up_to_8():
    with _Budget("08 permutation charpoly", 60.0):
        for n in range(1, 9):
            for perm in itertools.permutations(range(n)):
                ent = [0] * (n * n)
                seen = [False] * n
                expected = IntPoly.of(1)
                for i, j in enumerate(perm):
                    ent[i * n + j] = 1
                for i in range(n):
                    if seen[i]:
                        continue
                    c, j = 0, i
                    while not seen[j]:
                        seen[j] = True
                        j = perm[j]
                        c += 1
                    expected = expected * (IntPoly.monomial(c) - IntPoly.of(1))
                assert mat_charpoly_exact(IntMatrix(n, tuple(ent))) == expected


def test_c09_budget_validation_standard_configs():
    with _Budget("09 budget validation", 600.0):
        assert len(STANDARD_CONFIGS) == 12
        for spec, k, excluded in STANDARD_CONFIGS:
            out = validate_main_theorem(spec, k, 10 ** 4, seed=0,
                                        excluded=excluded)
            assert out["holds"], (spec, k, out)


def test_c10_controllability_exhaustive_n6():
    with _Budget("10 controllability sweep", 600.0):
        total = violations = skipped = 0
        for g in all_graphs(6):
            verdict = godsil_cross_check(g)["verdict"]
            total += 1
            if verdict == "violation":
                violations += 1
            elif verdict == "skipped":
                skipped += 1
        assert total == 32768
        assert violations == 0, f"{violations} violations ({skipped} skipped)"
        # path P3 spot check
        from polylab import Graph, automorphisms_bruteforce, graph_controllable
        p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert not graph_controllable(p3)
        assert automorphisms_bruteforce(p3) == 2


def test_c11_deterministic_eigenvalue():
    with _Budget("11 deterministic eigenvalue", 60.0):
        for n in (5, 8):
            for s in (2, n // 2):
                spec = FixedOutdegree(n, s)
                lin = IntPoly.of(-s, 1)
                for i in range(1000):
                    f = mat_charpoly_exact(sample(spec, SeedStream(31, i)))
                    assert poly_divides(lin, f)


def test_c12_cross_method_agreement_degree_10():
    with _Budget("12 cross-method agreement", 300.0):
        for signs in itertools.product((-1, 1), repeat=10):
            f = IntPoly(signs + (1,))
            a = low_degree_factors_enumerate(f, 2, 2)
            b = low_degree_factors_subset(f, 2)
            assert a.status == b.status, str(f)
            assert [fac.poly for fac in a.factors] == \
                [fac.poly for fac in b.factors], str(f)

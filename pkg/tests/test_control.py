"""Controllability, automorphisms, and the consistency cross-checks."""
import itertools
import random

import pytest

from polylab import (Graph, IntMatrix, IntPoly, automorphisms_bruteforce,
                     godsil_cross_check, graph_controllable, is_controllable,
                     kalman_matrix, mat_charpoly_exact, mat_rank_exact,
                     minimally_controllable, poly_divides)
from polylab.control import all_graphs
from polylab.ensembles import ErdosRenyi, SeedStream, sample


def _path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_graph_construction_and_validation():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert g.has_edge(0, 1) and g.has_edge(1, 0) and not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert g.edges() == [(0, 1), (1, 2)]
    assert Graph.from_json(g.to_json()) == g
    assert Graph.from_matrix(g.adjacency_matrix()) == g
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # diagonal entry
    with pytest.raises(ValueError):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_kalman_matrix_columns():
    a = IntMatrix.from_rows([[0, 1], [1, 0]])
    km = kalman_matrix(a, [1, 0])
    assert km.rows() == [[1, 0], [0, 1]]  # columns b, Ab
    with pytest.raises(ValueError):
        kalman_matrix(a, [1, 0, 0])


def test_path_p3_example():
    g = _path(3)
    f = mat_charpoly_exact(g.adjacency_matrix())
    assert f == IntPoly.of(0, -2, 0, 1)  # z^3 - 2z = z(z^2 - 2)
    assert not graph_controllable(g)
    assert automorphisms_bruteforce(g) == 2


def test_single_vertex_base_case():
    g = Graph(1, (0,))
    assert mat_charpoly_exact(g.adjacency_matrix()) == IntPoly.of(0, 1)
    assert graph_controllable(g)
    assert minimally_controllable(g)
    assert automorphisms_bruteforce(g) == 1
    assert godsil_cross_check(g)["verdict"] == "consistent"


def test_automorphism_counts_known_graphs():
    # complete graph K4: all 4! permutations
    k4 = Graph.from_edges(4, list(itertools.combinations(range(4), 2)))
    assert automorphisms_bruteforce(k4) == 24
    # 4-cycle: dihedral group of order 8
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert automorphisms_bruteforce(c4) == 8
    # empty graph on 3 vertices
    assert automorphisms_bruteforce(Graph(3, (0, 0, 0))) == 6
    with pytest.raises(ValueError):
        automorphisms_bruteforce(Graph(11, (0,) * 11))


def test_modular_prefilter_agrees_with_exact_rank():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(1, 6)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.5:
                    rows[i][j] = rows[j][i] = 1
        a = IntMatrix.from_rows(rows)
        b = [rng.randint(-3, 3) for _ in range(n)]
        km = kalman_matrix(a, b)
        assert is_controllable(a, b) == (mat_rank_exact(km) == n)


def test_exhaustive_implications_n_up_to_5():
    # controllable => asymmetric; irreducible charpoly => (minimally) controllable
    for n in range(1, 6):
        for g in all_graphs(n):
            report = godsil_cross_check(g)
            assert report["verdict"] != "violation"
            if report["controllable"]:
                assert report["automorphisms"] == 1


def test_permutation_graph_charpoly_has_root_one():
    # z - 1 always divides det(zI - P) for a permutation matrix P
    for n in range(1, 7):
        for perm in itertools.permutations(range(n)):
            ent = [0] * (n * n)
            for i, j in enumerate(perm):
                ent[i * n + j] = 1
            f = mat_charpoly_exact(IntMatrix(n, tuple(ent)))
            assert poly_divides(IntPoly.of(-1, 1), f)


def test_random_gnp_sweep_no_violations():
    cases = [(6, 60), (7, 60), (8, 20)]
    for n, reps in cases:
        for i in range(reps):
            m = sample(ErdosRenyi(n, 0.5), SeedStream(100 + n, i))
            report = godsil_cross_check(Graph.from_matrix(m))
            assert report["verdict"] != "violation"


def test_cross_check_report_fields():
    report = godsil_cross_check(_path(4))
    for key in ("n", "charpoly", "irreducibility", "controllable",
                "minimally_controllable", "automorphisms", "verdict"):
        assert key in report

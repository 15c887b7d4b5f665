"""Kalman rank controllability over exact integers, graph automorphisms, and
consistency cross-checks between irreducibility, controllability, and
asymmetry."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .factor import IRREDUCIBLE, classify_irreducibility
from .intmatrix import IntMatrix, mat_charpoly_exact, mat_rank_exact, mat_rank_mod

# Fixed 31-bit primes for the modular rank pre-filter.  A modular rank equal to
# n already certifies full rank, since modular rank never exceeds exact rank.
_RANK_PRIMES = (2147483629, 2147483587, 2147483563)


@dataclass(frozen=True)
class Graph:
    """Simple graph: symmetric 0/1 adjacency with zero diagonal, rows stored
    as bitmasks."""
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("need one bitmask row per vertex")
        for i, row in enumerate(self.rows):
            if row >> self.n:
                raise ValueError("row bitmask out of range")
            if (row >> i) & 1:
                raise ValueError("diagonal must be zero")
            for j in range(self.n):
                if ((row >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise ValueError("adjacency must be symmetric")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError("no loops in a simple graph")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return Graph(n, tuple(rows))

    @staticmethod
    def from_matrix(a: IntMatrix) -> "Graph":
        rows = []
        for i in range(a.n):
            row = 0
            for j in range(a.n):
                v = a.get(i, j)
                if v not in (0, 1):
                    raise ValueError("adjacency entries must be 0/1")
                if v:
                    row |= 1 << j
            rows.append(row)
        return Graph(a.n, tuple(rows))

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def adjacency_matrix(self) -> IntMatrix:
        n = self.n
        return IntMatrix(n, tuple((self.rows[i] >> j) & 1
                                  for i in range(n) for j in range(n)))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self.has_edge(i, j)]

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @staticmethod
    def from_json(data: dict) -> "Graph":
        return Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


def kalman_matrix(a: IntMatrix, b) -> IntMatrix:
    """n x n controllability matrix with columns b, Ab, A^2 b, ..., A^(n-1) b."""
    n = a.n
    b = [int(x) for x in b]
    if len(b) != n:
        raise ValueError("dimension mismatch")
    cols = [b]
    v = b
    for _ in range(n - 1):
        v = a.mat_vec(v)
        cols.append(v)
    return IntMatrix(n, tuple(cols[j][i] for i in range(n) for j in range(n)))


def is_controllable(a: IntMatrix, b) -> bool:
    """True iff the controllability matrix has exact rank n.  Modular ranks mod
    fixed 31-bit primes serve as a fast sound pre-filter before the exact
    fraction-free elimination."""
    km = kalman_matrix(a, b)
    for p in _RANK_PRIMES:
        if mat_rank_mod(km, p) == km.n:
            return True
    return mat_rank_exact(km) == km.n


def graph_controllable(g: Graph) -> bool:
    return is_controllable(g.adjacency_matrix(), [1] * g.n)


def minimally_controllable(g: Graph) -> bool:
    a = g.adjacency_matrix()
    for i in range(g.n):
        e = [0] * g.n
        e[i] = 1
        if not is_controllable(a, e):
            return False
    return True


def automorphisms_bruteforce(g: Graph) -> int:
    """Exact automorphism count by exhaustive scan with degree-class pruning."""
    n = g.n
    if n > 10:
        raise ValueError("brute force capped at n = 10")
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(g.degree(v), []).append(v)
    classes = list(by_degree.values())
    rows = g.rows
    count = 0
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        perm = [0] * n
        for cls, image in zip(classes, parts):
            for src, dst in zip(cls, image):
                perm[src] = dst
        ok = True
        for i in range(n):
            pi = perm[i]
            ri = rows[i]
            for j in range(i + 1, n):
                if ((ri >> j) & 1) != ((rows[pi] >> perm[j]) & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def godsil_cross_check(g: Graph, effort: str = "full") -> dict:
    """Cross-checks the implications: irreducible charpoly => controllable and
    minimally controllable; controllable => asymmetric.  Unknown irreducibility
    yields the verdict "skipped"."""
    f = mat_charpoly_exact(g.adjacency_matrix())
    report = classify_irreducibility(f, effort=effort)
    controllable = graph_controllable(g)
    minimal = minimally_controllable(g) if (controllable or report.status == IRREDUCIBLE) \
        else False
    autos = automorphisms_bruteforce(g) if g.n <= 10 else None
    verdict = "consistent"
    if report.status == "unknown":
        verdict = "skipped"
    else:
        if report.status == IRREDUCIBLE and not (controllable and minimal):
            verdict = "violation"
        if controllable and autos is not None and autos != 1:
            verdict = "violation"
    return {
        "n": g.n,
        "charpoly": f.to_json(),
        "irreducibility": report.status,
        "certificate": report.certificate,
        "controllable": controllable,
        "minimally_controllable": minimal,
        "automorphisms": autos,
        "verdict": verdict,
    }


def all_graphs(n: int):
    """All 2^C(n,2) simple graphs on n labelled vertices."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[t] for t in range(len(pairs)) if (mask >> t) & 1]
        yield Graph.from_edges(n, edges)

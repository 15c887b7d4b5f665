"""Exact integer matrices: fraction-free determinants, ranks, and
characteristic polynomials.

The characteristic polynomial det(zI - A) is computed by evaluating the
determinant at z = 0..n with Bareiss elimination and interpolating with exact
integer Newton forward differences (all divisions are provably exact because
the result has integer coefficients).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .intpoly import IntPoly


@dataclass(frozen=True)
class IntMatrix:
    n: int
    entries: tuple[int, ...]  # row-major, length n*n

    def __post_init__(self):
        if len(self.entries) != self.n * self.n:
            raise ValueError(f"expected {self.n * self.n} entries, got {len(self.entries)}")

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        n = len(rows)
        flat = []
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            flat.extend(int(x) for x in row)
        return IntMatrix(n, tuple(flat))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def get(self, i: int, j: int) -> int:
        return self.entries[i * self.n + j]

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def transpose(self) -> "IntMatrix":
        n = self.n
        return IntMatrix(n, tuple(self.entries[j * n + i] for i in range(n) for j in range(n)))

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        n = self.n
        a, b = self.rows(), other.rows()
        bt = list(zip(*b))
        out = []
        for i in range(n):
            ai = a[i]
            for j in range(n):
                out.append(sum(x * y for x, y in zip(ai, bt[j])))
        return IntMatrix(n, tuple(out))

    def mat_vec(self, v: list[int]) -> list[int]:
        if len(v) != self.n:
            raise ValueError("dimension mismatch")
        n = self.n
        e = self.entries
        return [sum(e[i * n + j] * v[j] for j in range(n)) for i in range(n)]

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [str(x) for x in self.entries]}

    @staticmethod
    def from_json(data) -> "IntMatrix":
        if isinstance(data, dict):
            n = int(data["n"])
            return IntMatrix(n, tuple(int(x) for x in data["entries"]))
        return IntMatrix.from_rows(data)


def mat_det_exact(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = a.n
    if n == 0:
        return 1
    m = a.rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        mk = m[k]
        pk = mk[k]
        for i in range(k + 1, n):
            mi = m[i]
            mik = mi[k]
            for j in range(k + 1, n):
                mi[j] = (pk * mi[j] - mik * mk[j]) // prev
            mi[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def mat_rank_exact(a: IntMatrix) -> int:
    """Exact rank via fraction-free elimination with row pivoting."""
    n = a.n
    m = a.rows()
    prev = 1
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, n):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        mr = m[r]
        pk = mr[c]
        for i in range(r + 1, n):
            mi = m[i]
            mic = mi[c]
            for j in range(c + 1, n):
                mi[j] = (pk * mi[j] - mic * mr[j]) // prev
            mi[c] = 0
        prev = pk
        r += 1
    return r


def mat_rank_mod(a: IntMatrix, p: int) -> int:
    """Rank of the matrix reduced mod a prime p (never exceeds the exact rank)."""
    n = a.n
    m = [[x % p for x in row] for row in a.rows()]
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, n):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(r + 1, n):
            f = m[i][c]
            if f:
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        r += 1
    return r


@lru_cache(maxsize=None)
def _falling_factorial_coeffs(n: int) -> tuple[tuple[int, ...], ...]:
    # coefficient lists (ascending) of x(x-1)...(x-j+1) for j = 0..n
    out = [(1,)]
    cur = [1]
    for j in range(n):
        # multiply by (x - j)
        nxt = [0] * (len(cur) + 1)
        for t, c in enumerate(cur):
            nxt[t + 1] += c
            nxt[t] -= j * c
        cur = nxt
        out.append(tuple(cur))
    return tuple(out)


def _interpolate_integer(ys: list[int]) -> list[int]:
    # ys are the values at x = 0..n of an integer-coefficient polynomial of
    # degree <= n; recover the coefficients exactly via Newton differences.
    n = len(ys) - 1
    deltas = [ys[0]]
    d = list(ys)
    for _ in range(n):
        d = [d[i + 1] - d[i] for i in range(len(d) - 1)]
        deltas.append(d[0])
    fall = _falling_factorial_coeffs(n)
    nf = math.factorial(n)
    acc = [0] * (n + 1)
    for j, dj in enumerate(deltas):
        if dj:
            w = dj * (nf // math.factorial(j))
            for t, c in enumerate(fall[j]):
                acc[t] += w * c
    coeffs = []
    for q in acc:
        quo, rem = divmod(q, nf)
        if rem:
            raise ArithmeticError("interpolation produced non-integer coefficient")
        coeffs.append(quo)
    return coeffs


def mat_charpoly_exact(a: IntMatrix) -> IntPoly:
    """Monic characteristic polynomial det(zI - A) with exact integer coefficients."""
    n = a.n
    if n == 0:
        return IntPoly.of(1)
    e = a.entries
    ys = []
    for x in range(n + 1):
        shifted = list(e)
        for i in range(n):
            shifted[i * n + i] = x - shifted[i * n + i]
        for i in range(n):
            for j in range(n):
                if j != i:
                    shifted[i * n + j] = -shifted[i * n + j]
        ys.append(mat_det_exact(IntMatrix(n, tuple(shifted))))
    coeffs = _interpolate_integer(ys)
    poly = IntPoly.from_list(coeffs)
    if not poly.is_monic or poly.degree != n:
        raise ArithmeticError("characteristic polynomial must be monic of degree n")
    return poly

"""Seeded samplers for every random polynomial and random matrix model.

Randomness comes from numpy's Philox counter-based generator keyed by
(master seed, stream index), so the same (seed, index) pair always yields the
identical sample on any platform and distinct indices give independent-grade
streams with no coordination.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .intmatrix import IntMatrix, mat_charpoly_exact
from .intpoly import IntPoly

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SeedStream:
    seed: int
    index: int = 0

    def generator(self) -> np.random.Generator:
        key = ((self.seed & _MASK64) << 64) | (self.index & _MASK64)
        return np.random.Generator(np.random.Philox(key=key))

    def child(self, index: int) -> "SeedStream":
        return SeedStream(self.seed, index)


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


@dataclass(frozen=True)
class RademacherPoly:
    n: int
    is_matrix = False
    model = "rademacher-poly"

    def __post_init__(self):
        _require(self.n >= 1, "need n >= 1")


@dataclass(frozen=True)
class UniformPoly:
    """Monic with the other coefficients uniform on the integers in [-N, N]."""
    n: int
    N: int
    is_matrix = False
    model = "uniform-poly"

    def __post_init__(self):
        _require(self.n >= 1, "need n >= 1")
        _require(self.N >= 1, "need N >= 1")


@dataclass(frozen=True)
class ZeroOneKonyagin:
    """Constant and leading coefficients fixed at 1; middle coefficients 0/1."""
    n: int
    is_matrix = False
    model = "zero-one-konyagin"

    def __post_init__(self):
        _require(self.n >= 1, "need n >= 1")


@dataclass(frozen=True)
class IidSignMatrix:
    n: int
    is_matrix = True
    model = "iid-sign"

    def __post_init__(self):
        _require(self.n >= 1, "need n >= 1")


@dataclass(frozen=True)
class SymmetricBounded:
    n: int
    B: int = 1
    mean_zero: bool = True
    is_matrix = True
    model = "symmetric-bounded"

    def __post_init__(self):
        _require(self.n >= 1, "need n >= 1")
        _require(self.B >= 1, "need B >= 1")

    @property
    def entry_variance(self) -> Fraction:
        """Variance of one entry (unit variance is not achievable for every B
        over bounded integers; the actual value is recorded here)."""
        B = self.B
        if self.mean_zero:
            # uniform on {-B..B} \ {0}
            return Fraction(sum(2 * b * b for b in range(1, B + 1)), 2 * B)
        ev = Fraction(0)  # uniform on {-B..B} has mean zero anyway
        return Fraction(sum(b * b for b in range(-B, B + 1)), 2 * B + 1) - ev ** 2


@dataclass(frozen=True)
class Elliptical:
    """Rademacher elliptical matrix: independent +-1 entries on and above the
    diagonal; below-diagonal entries are x_ji * xi_ij with P(xi = 1) = (1+rho)/2."""
    n: int
    rho: float
    is_matrix = True
    model = "elliptical"

    def __post_init__(self):
        _require(self.n >= 1, "need n >= 1")
        _require(-1 < self.rho < 1, "need -1 < rho < 1")


@dataclass(frozen=True)
class ProductSigns:
    n: int
    m: int
    is_matrix = True
    model = "product-signs"

    def __post_init__(self):
        _require(self.n >= 1, "need n >= 1")
        _require(self.m >= 1, "need m >= 1")


@dataclass(frozen=True)
class ErdosRenyi:
    n: int
    p: float
    is_matrix = True
    model = "erdos-renyi"

    def __post_init__(self):
        _require(self.n >= 1, "need n >= 1")
        _require(0 < self.p < 1, "need 0 < p < 1")


@dataclass(frozen=True)
class DirectedBernoulli:
    n: int
    p: float
    is_matrix = True
    model = "directed-bernoulli"

    def __post_init__(self):
        _require(self.n >= 1, "need n >= 1")
        _require(0 < self.p < 1, "need 0 < p < 1")


@dataclass(frozen=True)
class FixedOutdegree:
    n: int
    s: int
    is_matrix = True
    model = "fixed-outdegree"

    def __post_init__(self):
        _require(self.n >= 2, "need n >= 2")
        _require(1 <= self.s <= self.n - 1, "need 1 <= s <= n-1")


@dataclass(frozen=True)
class PermutationMatrix:
    n: int
    is_matrix = True
    model = "permutation"

    def __post_init__(self):
        _require(self.n >= 1, "need n >= 1")


EnsembleSpec = (RademacherPoly | UniformPoly | ZeroOneKonyagin | IidSignMatrix
                | SymmetricBounded | Elliptical | ProductSigns | ErdosRenyi
                | DirectedBernoulli | FixedOutdegree | PermutationMatrix)

_MODEL_CLASSES = {cls.model: cls for cls in (
    RademacherPoly, UniformPoly, ZeroOneKonyagin, IidSignMatrix, SymmetricBounded,
    Elliptical, ProductSigns, ErdosRenyi, DirectedBernoulli, FixedOutdegree,
    PermutationMatrix)}


def _signs(g: np.random.Generator, size: int) -> list[int]:
    return (2 * g.integers(0, 2, size=size) - 1).tolist()


def _sign_matrix(g: np.random.Generator, n: int) -> IntMatrix:
    return IntMatrix(n, tuple(_signs(g, n * n)))


def sample_with_generator(spec: EnsembleSpec, g: np.random.Generator):
    """One sample drawn from an existing generator (advances its state)."""
    n = spec.n
    if isinstance(spec, RademacherPoly):
        return IntPoly(tuple(_signs(g, n)) + (1,))
    if isinstance(spec, UniformPoly):
        coeffs = g.integers(-spec.N, spec.N + 1, size=n).tolist()
        return IntPoly.from_list(coeffs + [1])
    if isinstance(spec, ZeroOneKonyagin):
        middle = g.integers(0, 2, size=n - 1).tolist()
        return IntPoly((1, *middle, 1))
    if isinstance(spec, IidSignMatrix):
        return _sign_matrix(g, n)
    if isinstance(spec, SymmetricBounded):
        vals = ([b for b in range(-spec.B, spec.B + 1) if b != 0]
                if spec.mean_zero else list(range(-spec.B, spec.B + 1)))
        draws = g.integers(0, len(vals), size=n * (n + 1) // 2).tolist()
        ent = [0] * (n * n)
        t = 0
        for i in range(n):
            for j in range(i, n):
                v = vals[draws[t]]
                t += 1
                ent[i * n + j] = v
                ent[j * n + i] = v
        return IntMatrix(n, tuple(ent))
    if isinstance(spec, Elliptical):
        upper = _signs(g, n * (n + 1) // 2)
        xi_raw = g.random(size=n * (n - 1) // 2)
        xi = [1 if u < (1 + spec.rho) / 2 else -1 for u in xi_raw.tolist()]
        ent = [0] * (n * n)
        t = 0
        for i in range(n):
            for j in range(i, n):
                ent[i * n + j] = upper[t]
                t += 1
        t = 0
        for i in range(1, n):
            for j in range(i):
                ent[i * n + j] = ent[j * n + i] * xi[t]
                t += 1
        return IntMatrix(n, tuple(ent))
    if isinstance(spec, ProductSigns):
        acc = _sign_matrix(g, n)
        for _ in range(spec.m - 1):
            acc = acc * _sign_matrix(g, n)
        return acc
    if isinstance(spec, ErdosRenyi):
        u = g.random(size=n * (n - 1) // 2).tolist()
        ent = [0] * (n * n)
        t = 0
        for i in range(n):
            for j in range(i + 1, n):
                if u[t] < spec.p:
                    ent[i * n + j] = 1
                    ent[j * n + i] = 1
                t += 1
        return IntMatrix(n, tuple(ent))
    if isinstance(spec, DirectedBernoulli):
        u = g.random(size=n * n)
        return IntMatrix(n, tuple(int(x) for x in (u < spec.p)))
    if isinstance(spec, FixedOutdegree):
        ent = [0] * (n * n)
        for i in range(n):
            # Fisher-Yates prefix: exactly uniform over the C(n, s) supports
            for j in g.permutation(n)[:spec.s].tolist():
                ent[i * n + j] = 1
        return IntMatrix(n, tuple(ent))
    if isinstance(spec, PermutationMatrix):
        perm = g.permutation(n).tolist()
        ent = [0] * (n * n)
        for i, j in enumerate(perm):
            ent[i * n + j] = 1
        return IntMatrix(n, tuple(ent))
    raise TypeError(f"unknown ensemble spec {spec!r}")


def sample(spec: EnsembleSpec, stream: SeedStream):
    """Reproducible sample: identical output for identical (spec, stream)."""
    return sample_with_generator(spec, stream.generator())


def sample_block(spec: EnsembleSpec, g: np.random.Generator, count: int) -> list:
    """Sequential block of samples from one generator; polynomial models draw
    their coefficient block in a single vectorized call."""
    n = spec.n
    if isinstance(spec, RademacherPoly):
        raw = (2 * g.integers(0, 2, size=(count, n)) - 1).tolist()
        return [IntPoly(tuple(row) + (1,)) for row in raw]
    if isinstance(spec, UniformPoly):
        raw = g.integers(-spec.N, spec.N + 1, size=(count, n)).tolist()
        return [IntPoly.from_list(row + [1]) for row in raw]
    if isinstance(spec, ZeroOneKonyagin):
        raw = g.integers(0, 2, size=(count, n - 1)).tolist()
        return [IntPoly((1, *row, 1)) for row in raw]
    return [sample_with_generator(spec, g) for _ in range(count)]


def charpoly_of_sample(spec: EnsembleSpec, stream: SeedStream) -> IntPoly:
    if not spec.is_matrix:
        raise ValueError("need a matrix-valued ensemble")
    return mat_charpoly_exact(sample(spec, stream))


def spec_to_json(spec: EnsembleSpec) -> dict:
    out = {"model": spec.model}
    for key in spec.__dataclass_fields__:
        out[key] = getattr(spec, key)
    return out


def spec_from_json(data: dict) -> EnsembleSpec:
    data = dict(data)
    tag = data.pop("model")
    try:
        cls = _MODEL_CLASSES[tag]
    except KeyError:
        raise ValueError(f"unknown ensemble model {tag!r}") from None
    return cls(**data)

"""Dense integer polynomials with exact arbitrary-precision arithmetic.

Coefficients are stored ascending by degree: ``coeffs[i]`` multiplies z^i.
The zero polynomial has an empty coefficient tuple and degree -1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    @staticmethod
    def of(*coeffs: int) -> "IntPoly":
        """Build a polynomial from ascending coefficients, trimming leading zeros."""
        return IntPoly.from_list(list(coeffs))

    @staticmethod
    def from_list(coeffs) -> "IntPoly":
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        return IntPoly(tuple(int(c) for c in coeffs[:end]))

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly(())

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> "IntPoly":
        if coeff == 0:
            return IntPoly(())
        return IntPoly((0,) * degree + (int(coeff),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly.from_list(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(tuple(out))

    def scale(self, c: int) -> "IntPoly":
        if c == 0:
            return IntPoly(())
        return IntPoly(tuple(c * a for a in self.coeffs))

    def derivative(self) -> "IntPoly":
        return IntPoly.from_list([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def to_json(self) -> list[str]:
        """Decimal strings, ascending by degree (no precision loss in JSON)."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json(data) -> "IntPoly":
        return IntPoly.from_list([int(c) for c in data])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                var = "z" if i == 1 else f"z^{i}"
                term = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def poly_eval_int(f: IntPoly, x: int) -> int:
    """Exact Horner evaluation at an integer point."""
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def poly_divmod_monic(f: IntPoly, h: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Exact division of f by a monic divisor h: returns (q, r) with f = q*h + r
    and deg(r) < deg(h). All arithmetic stays over the integers."""
    if h.is_zero or not h.is_monic:
        raise ValueError("divisor must be monic")
    if h.degree < 1:
        raise ValueError("divisor must have degree >= 1")
    rem = list(f.coeffs)
    dh = h.degree
    if f.degree < dh:
        return IntPoly(()), f
    q = [0] * (f.degree - dh + 1)
    hc = h.coeffs
    for i in range(f.degree - dh, -1, -1):
        c = rem[i + dh]
        if c:
            q[i] = c
            for j in range(dh + 1):
                rem[i + j] -= c * hc[j]
    return IntPoly.from_list(q), IntPoly.from_list(rem[:dh])


def poly_divides(h: IntPoly, f: IntPoly) -> bool:
    """True iff the monic polynomial h exactly divides f over the integers."""
    _, r = poly_divmod_monic(f, h)
    return r.is_zero


def cauchy_root_bound(f: IntPoly) -> Fraction:
    """M = 1 + max |a_i| over non-leading coefficients; every root of the monic f
    has modulus < M."""
    if not f.is_monic:
        raise ValueError("root bound requires a monic polynomial")
    if f.degree < 1:
        raise ValueError("root bound requires degree >= 1")
    lower = f.coeffs[:-1]
    m = max((abs(c) for c in lower), default=0)
    return Fraction(1 + m)


def matrix_root_bound(n: int) -> Fraction:
    """Alternative constant for +-1 matrix inputs: every eigenvalue of an n x n
    sign matrix has absolute value at most n (almost surely, and in fact always
    since the spectral radius is at most the operator norm, which is <= n)."""
    return Fraction(n)

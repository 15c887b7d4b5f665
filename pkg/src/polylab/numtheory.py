"""Elementary arithmetic functions: factorization by trial division, Mobius,
Euler phi, primality, multiplicative order, and a shared totient sieve."""
from __future__ import annotations

import math
from functools import lru_cache


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization of m >= 1 as (prime, exponent) pairs, by trial division."""
    if m < 1:
        raise ValueError("need m >= 1")
    out = []
    d = 2
    while d * d <= m:
        e = 0
        while m % d == 0:
            e += 1
            m //= d
        if e:
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def first_primes(count: int) -> list[int]:
    out = []
    m = 2
    while len(out) < count:
        if is_prime(m):
            out.append(m)
        m += 1
    return out


def mobius(d: int) -> int:
    if d < 1:
        raise ValueError("need d >= 1")
    fac = factorize(d)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(d: int) -> int:
    if d < 1:
        raise ValueError("need d >= 1")
    out = d
    for p, _ in factorize(d):
        out -= out // p
    return out


def divisors(m: int) -> list[int]:
    """Sorted positive divisors of m >= 1."""
    divs = [1]
    for p, e in factorize(m):
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in (Z/m)^*; requires gcd(a, m) = 1."""
    if math.gcd(a, m) != 1:
        raise ValueError("a must be a unit mod m")
    for d in divisors(euler_phi(m)):
        if pow(a, d, m) == 1:
            return d
    raise AssertionError("unreachable")


def prime_power_decompose(q: int) -> tuple[int, int]:
    """Write q = p^a for a prime p, else raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    return fac[0]


_phi_sieve: list[int] = [0, 1]


def totient_sieve(limit: int) -> list[int]:
    """phi(0..limit) via a linear-style sieve; grows a shared cached table."""
    global _phi_sieve
    if limit < len(_phi_sieve):
        return _phi_sieve
    n = max(limit, 2 * len(_phi_sieve))
    phi = list(range(n + 1))
    for p in range(2, n + 1):
        if phi[p] == p:  # p prime
            for m in range(p, n + 1, p):
                phi[m] -= phi[m] // p
    phi[0] = 0
    _phi_sieve = phi
    return _phi_sieve

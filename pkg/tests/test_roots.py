"""Numeric root localization and its exactness contracts."""
import random

import pytest

from polylab import IntPoly, annulus_check, cauchy_root_bound, find_roots, max_root_modulus
from polylab.roots import refine_roots


def _random_pm1(rng, deg):
    return IntPoly(tuple(rng.choice((-1, 1)) for _ in range(deg)) + (1,))


def test_known_roots_unit_circle():
    # z^3 + z^2 + z + 1 has roots -1, +-i, all of modulus 1
    rs = find_roots(IntPoly.of(1, 1, 1, 1))
    assert rs.converged
    assert sorted(abs(z) for z in rs.roots) == pytest.approx([1, 1, 1], abs=1e-9)
    rs = find_roots(IntPoly.of(1, 1))
    assert rs.converged
    assert rs.roots[0] == pytest.approx(-1, abs=1e-9)


def test_roots_reconstruct_coefficients():
    # product of (z - root) recovers each exact coefficient to 1e-6 relative
    rng = random.Random(2)
    for _ in range(150):
        f = _random_pm1(rng, rng.randint(1, 40))
        rs = find_roots(f)
        if not rs.converged:
            continue
        cs = [complex(1.0)]
        for r in rs.roots:
            nxt = [0j] * (len(cs) + 1)
            for t, c in enumerate(cs):
                nxt[t + 1] += c
                nxt[t] -= r * c
            cs = nxt
        for exact, approx in zip(f.coeffs, cs):
            assert abs(approx - exact) <= 1e-6 * (1 + abs(exact))


def test_max_root_modulus_below_cauchy_bound():
    rng = random.Random(4)
    for _ in range(300):
        f = _random_pm1(rng, rng.randint(1, 40))
        assert max_root_modulus(f) < float(cauchy_root_bound(f)) - 1e-9


def test_annulus_on_random_pm1_up_to_degree_50():
    rng = random.Random(6)
    for _ in range(200):
        f = _random_pm1(rng, rng.randint(1, 50))
        assert annulus_check(f)


def test_annulus_input_validation():
    with pytest.raises(ValueError):
        annulus_check(IntPoly.of(2, 1, 1))  # coefficient 2 is not +-1
    with pytest.raises(ValueError):
        annulus_check(IntPoly.of(1, 2))  # not monic


def test_clustered_flag_on_repeated_roots():
    # (z-1)^4: fourfold root; must terminate and not claim 1e-12 precision
    f = IntPoly.of(1, -4, 6, -4, 1)
    rs = find_roots(f)
    for z in rs.roots:
        assert abs(z - 1) < 1e-2
    if rs.converged:
        assert rs.clustered


def test_refine_roots_reaches_high_precision():
    f = IntPoly.of(-2, 0, 1)  # z^2 - 2
    rs = find_roots(f)
    refined = refine_roots(f, rs.roots)
    for z in refined:
        assert abs(abs(complex(z)) ** 2 - 2) < 1e-12


def test_huge_coefficients_do_not_overflow():
    f = IntPoly.of(-(10 ** 400), 0, 1)  # roots +-10^200
    rs = find_roots(f)
    assert rs.converged
    assert max(abs(z) for z in rs.roots) == pytest.approx(10 ** 200, rel=1e-9)


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        find_roots(IntPoly.zero())
    with pytest.raises(ValueError):
        find_roots(IntPoly.of(3))


def test_rootset_json():
    rs = find_roots(IntPoly.of(1, 1))
    data = rs.to_json()
    assert data["converged"] is True
    assert data["roots"][0][0] == pytest.approx(-1, abs=1e-9)

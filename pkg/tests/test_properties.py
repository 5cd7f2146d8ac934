"""Seeded randomized invariants that cut across the modules."""

import random

from ringcodes.linalg import Code, code_sum, dual, intersect, random_code, rk_r
from ringcodes.rings import ring

FAMILIES = [("Z:2^2", 2), ("Z:2^3", 1), ("Z:3^2", 2), ("Fgamma:5^2", 1), ("U:2", 1)]


def test_code_sizes_are_q_powers():
    rng = random.Random(23)
    for spec, n in FAMILIES:
        r = ring(spec)
        for _ in range(30):
            c = random_code(rng, r, n)
            d = c.dim()
            assert d >= 0 and r.q**d == c.size


def test_frobenius_size_product():
    rng = random.Random(29)
    for spec, n in FAMILIES:
        r = ring(spec)
        for _ in range(25):
            c = random_code(rng, r, n)
            assert c.size * dual(c).size == r.size**n


def test_intersection_bounds_and_symmetry():
    rng = random.Random(31)
    for spec, n in FAMILIES:
        r = ring(spec)
        for _ in range(25):
            c = random_code(rng, r, n)
            d = random_code(rng, r, n)
            ell = intersect(c, d).dim()
            assert ell <= min(c.dim(), d.dim())
            assert ell == intersect(d, c).dim()
            assert intersect(c, c).dim() == c.dim()


def test_rank_bounds():
    # rank can exceed n over non-chain local rings (e.g. the radical of U:2
    # needs two generators at length 1), but never log_q |C|
    rng = random.Random(37)
    for spec, n in FAMILIES:
        r = ring(spec)
        for _ in range(25):
            c = random_code(rng, r, n)
            rank = rk_r(c)
            assert 0 <= rank <= c.dim()
            assert c.size <= r.size**rank


def test_sum_contains_both():
    rng = random.Random(41)
    for spec, n in [("Z:2^2", 2), ("Fgamma:5^2", 2)]:
        r = ring(spec)
        for _ in range(20):
            c = random_code(rng, r, n)
            d = random_code(rng, r, n)
            s = code_sum(c, d)
            assert intersect(s, c).same_elements(c)
            assert intersect(s, d).same_elements(d)


def test_zero_and_full_are_fixed_points():
    for spec, n in FAMILIES:
        r = ring(spec)
        zero = Code.zero(r, n)
        full = Code.full(r, n)
        assert dual(zero).same_elements(full)
        assert dual(full).same_elements(zero)
        assert intersect(zero, full).same_elements(zero)
        assert code_sum(zero, full).same_elements(full)

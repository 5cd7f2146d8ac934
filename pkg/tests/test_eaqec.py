"""EAQEC parameter substitution and the constacyclic pair pipeline."""

import random

import pytest

from ringcodes.constacyclic import ConstacyclicCode, all_towers, modulus_factors
from ringcodes.errors import NegativeParameter
from ringcodes.eaqec import eaqec_from_constacyclic_pair, eaqec_from_lip
from ringcodes.rings import ring

F5G = ring("Fgamma:5^2")


def test_eaqec_from_lip_substitution():
    p = eaqec_from_lip(k1=4, d1=3, k2=4, d2=3, ell=1, d1perp=4, n=7, q=2)
    assert (p.n, p.k, p.d, p.c, p.q) == (7, 3, 3, 3, 2)
    assert str(p) == "[[7,3,3;3]]_2"

    degenerate = eaqec_from_lip(k1=4, d1=3, k2=4, d2=5, ell=4, d1perp=2, n=7, q=2)
    assert degenerate.k == 0 and degenerate.c == 0

    with pytest.raises(NegativeParameter):
        eaqec_from_lip(k1=2, d1=1, k2=3, d2=1, ell=3, d1perp=1, n=5, q=2)


def test_eaqec_from_lip_randomized_against_recomputation():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randrange(2, 30)
        k1 = rng.randrange(0, n + 1)
        k2 = rng.randrange(0, n + 1)
        ell = rng.randrange(0, min(k1, k2) + 1)
        d1 = rng.randrange(1, n + 1)
        d2 = rng.randrange(1, n + 1)
        d1p = rng.randrange(1, n + 1)
        p = eaqec_from_lip(k1, d1, k2, d2, ell, d1p, n, 5)
        assert p.k == k2 - ell
        assert p.c == k1 - ell
        assert p.d == min(d1p, d2)
        assert p.k >= 0 and p.c >= 0 and p.d >= 1


def test_identical_pair_gives_zero_logical():
    towers = all_towers(F5G, 3, 1)
    cc = towers[len(towers) // 2]
    params, report = eaqec_from_constacyclic_pair(cc, cc)
    assert params.k == 0 and params.c == 0
    assert report.tau1 == report.tau2 == 0


def test_constacyclic_pair_full_params():
    factors = modulus_factors(F5G, 3, 1)
    c1 = ConstacyclicCode.free(F5G, 3, 1, frozenset({0}))
    c2 = ConstacyclicCode.from_tower(F5G, 3, 1, [factors[0] * factors[1], factors[0]])
    params, report = eaqec_from_constacyclic_pair(c1, c2)
    k1, k2 = c1.dim(), c2.dim()
    from ringcodes.constacyclic import constacyclic_intersection

    _, ell = constacyclic_intersection(c1, c2, check=True)
    assert params.c == k1 - ell == report.tau1
    assert params.k == k2 - ell == report.tau2
    assert params.n == 6 and params.q == 5
    assert params.d is not None and params.d >= 1
    assert params.provenance["ell"] == ell


def test_zero_code_distances_are_none():
    zero = ConstacyclicCode.zero_code(F5G, 3, 1)
    full = ConstacyclicCode.full_ring(F5G, 3, 1)
    params, _ = eaqec_from_constacyclic_pair(full, zero)
    # w2 undefined (zero code); distance falls back to the dual side
    assert params.provenance["w2"] is None
    # dual of the full ring is zero, so w1perp is undefined as well
    assert params.provenance["w1perp"] is None
    assert params.d is None


def test_tau_consistency_sweep_n3():
    towers = all_towers(F5G, 3, 1)
    cache = {}
    from ringcodes.eaqec import _dual_gray_min_or_none, _gray_min_or_none

    for cc in towers:
        cache[cc.label()] = {
            "w": _gray_min_or_none(cc),
            "wperp": _dual_gray_min_or_none(cc),
        }
    for a in towers:
        for b in towers:
            dist = {"w2": cache[b.label()]["w"], "w1perp": cache[a.label()]["wperp"]}
            params, report = eaqec_from_constacyclic_pair(a, b, distances=dist)
            assert report.tau1 == a.dim() - params.provenance["ell"]
            assert report.tau2 == b.dim() - params.provenance["ell"]
            assert params.k >= 0 and params.c >= 0
            if params.d is not None:
                assert params.d >= 1

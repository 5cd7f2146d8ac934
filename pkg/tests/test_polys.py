"""Polynomial arithmetic, reciprocals, and x^n - lambda factorization."""

import pytest

from ringcodes.errors import (
    NonUnitConstantTerm,
    NonUnitLeadingCoefficient,
    NotAUnit,
    NotCoprimeLength,
)
from ringcodes.polys import (
    Poly,
    factor_unital,
    fq_factor_squarefree,
    fq_gcd,
    fq_mul,
    poly_arith,
    poly_product,
    x_pow_minus,
)
from ringcodes.rings import ring


Z4 = ring("Z:2^2")


def zp(*coeffs):
    return Poly.from_coeffs(Z4, coeffs)


def test_mul_example():
    # (x+1)(x+3) = x^2 + 3 over Z4
    assert zp(1, 1) * zp(3, 1) == zp(3, 0, 1)


def test_divmod_examples():
    num = x_pow_minus(Z4, 7, Z4.parse_element(-1))  # x^7 + 1
    quo, rem = num.divmod(zp(1, 1))
    assert rem.is_zero()
    expected = zp(1, 1, 2, 1) * zp(1, 2, 1, 1)  # (x^3-2x^2+x+1)(x^3+x^2+2x+1)
    assert quo == expected

    with pytest.raises(NonUnitLeadingCoefficient):
        zp(1, 1).divmod(zp(1, 2))


def test_gcd_residue():
    f = zp(1, 2, 1, 1)
    h = zp(1, 1)
    assert poly_arith(f, h, "gcd_residue") == [1]
    assert fq_gcd([1, 1], [1, 0, 1], 2) == [1, 1]  # x+1 divides x^2+1 over F2


def test_reciprocal():
    assert zp(1, 1).is_self_reciprocal()
    g = zp(1, 1, 2, 1)  # x^3 + 2x^2 + x + 1 = x^3 - 2x^2 + x + 1
    f = zp(1, 2, 1, 1)  # x^3 + x^2 + 2x + 1
    assert f.reciprocal() == g
    assert g.reciprocal() == f
    c = Poly.from_coeffs(Z4, [3])
    assert c.reciprocal() == Poly.one(Z4)
    with pytest.raises(NonUnitConstantTerm):
        zp(2, 1).reciprocal()


def test_reciprocal_involution():
    # (a*)* = lead(a)^{-1} * a, so the involution is exact on monic inputs
    # with unit constant term (all tower divisors are monic).
    import random

    rng = random.Random(2)
    checked = 0
    while checked < 40:
        coeffs = [rng.randrange(4) for _ in range(rng.randrange(1, 6))] + [1]
        p = Poly(Z4, tuple(coeffs))
        if not Z4.is_unit(p.coeffs[0]):
            continue
        assert p.reciprocal().reciprocal() == p
        checked += 1


def test_eval_and_str():
    p = zp(3, 0, 1)
    assert p.eval(1) == 0
    assert str(zp(1, 2, 1, 1)) == "x^3+x^2+2x+1"
    assert str(Poly.zero(Z4)) == "0"


def test_factor_unital_z4_negacyclic():
    factors = factor_unital(Z4, 7, Z4.parse_element(-1))
    assert [str(f) for f in factors] == [
        "x+1",
        "x^3+2x^2+x+1",
        "x^3+x^2+2x+1",
    ]
    assert poly_product(Z4, factors) == x_pow_minus(Z4, 7, 3)
    # residues pairwise coprime
    for i in range(3):
        for j in range(i + 1, 3):
            assert fq_gcd(factors[i].residue(), factors[j].residue(), 2) == [1]


def test_factor_unital_trivial_and_cyclic():
    assert factor_unital(Z4, 1, 1) == [zp(3, 1)]
    fs = factor_unital(Z4, 3, 1)
    assert [str(f) for f in fs] == ["x+3", "x^2+x+1"]
    assert poly_product(Z4, fs) == x_pow_minus(Z4, 3, 1)


def test_factor_unital_f5gamma():
    f5g = ring("Fgamma:5^2")
    fs = factor_unital(f5g, 4, 1)
    assert len(fs) == 4 and all(f.degree == 1 for f in fs)
    assert poly_product(f5g, fs) == x_pow_minus(f5g, 4, 1)
    # x^4 - 2 is irreducible over F5, so it lifts whole
    lam2 = f5g.from_coeffs([2, 0])
    fs2 = factor_unital(f5g, 4, lam2)
    assert len(fs2) == 1 and fs2[0] == x_pow_minus(f5g, 4, lam2)
    # x^4 - 4 = (x^2-2)(x^2-3)
    lam4 = f5g.from_coeffs([4, 0])
    fs4 = factor_unital(f5g, 4, lam4)
    assert [f.degree for f in fs4] == [2, 2]
    assert poly_product(f5g, fs4) == x_pow_minus(f5g, 4, lam4)


def test_factor_unital_rejects():
    with pytest.raises(NotCoprimeLength):
        factor_unital(Z4, 4, 1)
    with pytest.raises(NotAUnit):
        factor_unital(Z4, 3, 2)


def test_fq_factor_squarefree_matches_product():
    for q, coeffs in [(2, [1, 1, 1, 1, 1, 1, 1, 1]), (5, [4, 0, 0, 0, 1]), (3, [2, 0, 0, 1])]:
        fs = fq_factor_squarefree(list(coeffs), q)
        prod = [1]
        for f in fs:
            prod = fq_mul(prod, f, q)
        assert prod == coeffs


def test_equal_degree_splitting_fallback():
    # x^47 - 1 over F2: (x+1) times two irreducible factors of degree 23,
    # beyond the trial-division cap.
    f = [1] + [0] * 46 + [1]
    f[0] = 1
    fs = fq_factor_squarefree(f, 2, seed=7)
    assert sorted(len(g) - 1 for g in fs) == [1, 23, 23]
    prod = [1]
    for g in fs:
        prod = fq_mul(prod, g, 2)
    assert prod == [1] + [0] * 46 + [1]

    # the lift through Z4 stays exact
    z4 = ring("Z:2^2")
    lifted = factor_unital(z4, 47, 1, seed=7)
    assert sorted(p.degree for p in lifted) == [1, 23, 23]
    assert poly_product(z4, lifted) == x_pow_minus(z4, 47, 1)


def test_hensel_lift_various_rings():
    for spec, n, lam_c in [("Z:3^2", 4, 1), ("Fgamma:5^2", 3, 1), ("Z:2^3", 7, 1)]:
        r = ring(spec)
        lam = r.parse_element(lam_c)
        fs = factor_unital(r, n, lam)
        assert poly_product(r, fs) == x_pow_minus(r, n, lam)
        assert all(f.is_monic() for f in fs)

"""Divisor towers, canonical tuples, duals, and intersections."""

import pytest

from ringcodes.errors import (
    BrokenChain,
    MismatchedConstacyclicity,
    NotADivisor,
    PreconditionFailed,
    SameResidueLambda,
)
from ringcodes.constacyclic import (
    ConstacyclicCode,
    all_towers,
    constacyclic_dual,
    constacyclic_intersection,
    constacyclic_lcd_check,
    constacyclic_size,
    constashift,
    divisor_support,
    free_sum_check,
    materialize_generator_divisors,
    mixed_lambda_intersection,
    modulus_factors,
    parse_tower_label,
    support_poly,
)
from ringcodes.linalg import key_of_vector
from ringcodes.polys import Poly, x_pow_minus
from ringcodes.rings import ring

Z4 = ring("Z:2^2")
NEG = Z4.parse_element(-1)  # lambda = -1


def z4_factors():
    # index 0 = x+1 (h), 1 = x^3+2x^2+x+1 (g), 2 = x^3+x^2+2x+1 (f)
    return modulus_factors(Z4, 7, NEG)


def c1_c2():
    h, g, f = z4_factors()
    c1 = ConstacyclicCode.from_tower(Z4, 7, NEG, [f * g, f])
    c2 = ConstacyclicCode.from_tower(Z4, 7, NEG, [h * f, h])
    return c1, c2


def test_supports_and_labels():
    c1, c2 = c1_c2()
    assert c1.supports == (frozenset({1, 2}), frozenset({2}))
    assert c1.label() == "D0=1,2;D1=2"
    assert c2.label() == "D0=0,2;D1=0"
    rt = parse_tower_label(Z4, 7, NEG, c1.label())
    assert rt == c1


def test_tower_validation():
    h, g, f = z4_factors()
    with pytest.raises(BrokenChain):
        ConstacyclicCode.from_tower(Z4, 7, NEG, [f, g])  # g does not divide f
    with pytest.raises(BrokenChain):
        ConstacyclicCode.from_tower(Z4, 7, NEG, [f])  # wrong number of levels
    with pytest.raises(NotADivisor):
        divisor_support(Z4, 7, NEG, Poly.from_coeffs(Z4, [1, 0, 1]))


def test_materialized_code_is_constacyclic():
    c1, _ = c1_c2()
    code = c1.code()
    assert code.size == 2**5
    keyset = set(code.keys.tolist())
    for vec in code.vectors():
        assert key_of_vector(Z4, constashift(Z4, NEG, vec)) in keyset


def test_full_and_zero_towers():
    full = ConstacyclicCode.full_ring(Z4, 7, NEG)
    assert full.dim() == 7 * 2 and full.code().size == 4**7
    zero = ConstacyclicCode.zero_code(Z4, 7, NEG)
    assert zero.dim() == 0 and zero.code().size == 1


def test_canonical_tuple_z4_example():
    h, g, f = z4_factors()
    c1, _ = c1_c2()
    f0, f1, f2 = c1.canonical_tuple()
    assert (f0, f1, f2) == (f, h, g)
    # <fg, 2f> = <fg, 2fh>: the canonical generators regenerate the code
    regen = materialize_generator_divisors(Z4, 7, NEG, [f * g, f * h])
    assert regen.same_elements(c1.code())


def test_canonical_tuple_degenerate():
    modulus = x_pow_minus(Z4, 7, NEG)
    full = ConstacyclicCode.full_ring(Z4, 7, NEG)
    assert full.canonical_tuple() == (Poly.one(Z4), modulus, Poly.one(Z4))
    zero = ConstacyclicCode.zero_code(Z4, 7, NEG)
    assert zero.canonical_tuple() == (modulus, Poly.one(Z4), Poly.one(Z4))


def test_sizes_from_tuple():
    c1, _ = c1_c2()
    size, dual_size = constacyclic_size(c1, check=True)
    assert size == 2**5 and dual_size == 2**9
    assert size * dual_size == 4**7
    full = ConstacyclicCode.full_ring(Z4, 7, NEG)
    assert constacyclic_size(full)[0] == 4**7


def test_constacyclic_dual():
    c1, _ = c1_c2()
    d = constacyclic_dual(c1, check=True)
    assert d.code().size == 2**9
    # dual tower is (hf, h) in factor indices {0,2}, {0}
    assert d.supports == (frozenset({0, 2}), frozenset({0}))
    full = ConstacyclicCode.full_ring(Z4, 7, NEG)
    assert constacyclic_dual(full).code().size == 1


def test_self_dual_tower():
    # tower (x^7+1, 1) is <2> = 2*R^7: |C| = 2^7 and C equals its dual
    cc = ConstacyclicCode(Z4, 7, NEG, [frozenset({0, 1, 2}), frozenset()])
    assert cc.code().size == 2**7
    d = constacyclic_dual(cc, check=True)
    assert d == cc
    assert d.code().same_elements(cc.code())


def test_dual_matches_module_dual_all_towers_small():
    f5g = ring("Fgamma:5^2")
    lam = 1
    for cc in all_towers(f5g, 3, lam):
        d = constacyclic_dual(cc, check=True)  # check raises on mismatch
        assert d.code().size * cc.code().size == f5g.size**3


def test_intersection_z4_example():
    h, g, f = z4_factors()
    c1, c2 = c1_c2()
    inter, ell = constacyclic_intersection(c1, c2, check=True)
    assert ell == 3
    # <lcm(fg,hf), 2 lcm(f,h)> = <2(x+1)(x^3+x^2+2x+1)>
    assert inter.supports == (frozenset({0, 1, 2}), frozenset({0, 2}))
    expected = materialize_generator_divisors(Z4, 7, NEG, [x_pow_minus(Z4, 7, NEG), h * f])
    assert expected.same_elements(inter.code())


def test_intersection_trivial_cases():
    c1, _ = c1_c2()
    same, ell = constacyclic_intersection(c1, c1, check=True)
    assert same == c1 and ell == c1.dim()
    full = ConstacyclicCode.full_ring(Z4, 7, NEG)
    inter, ell2 = constacyclic_intersection(c1, full, check=True)
    assert inter == c1 and ell2 == c1.dim()


def test_intersection_lambda_mismatch():
    f5g = ring("Fgamma:5^2")
    a = ConstacyclicCode.full_ring(f5g, 4, 1)
    b = ConstacyclicCode.full_ring(f5g, 4, 2)
    with pytest.raises(MismatchedConstacyclicity):
        constacyclic_intersection(a, b)


def test_all_towers_count():
    assert len(all_towers(Z4, 7, NEG)) == 27  # 3 factors, 3 levels each
    f5g = ring("Fgamma:5^2")
    assert len(all_towers(f5g, 4, 1)) == 81
    assert len(all_towers(f5g, 4, f5g.from_coeffs([2, 0]))) == 3


def test_printed_dim_variant_overcounts():
    from ringcodes.constacyclic import printed_intersection_dim

    h, g, f = z4_factors()
    a = ConstacyclicCode.free(Z4, 7, NEG, h)
    b = ConstacyclicCode.free(Z4, 7, NEG, f)
    _, ell = constacyclic_intersection(a, b, check=True)
    assert ell == 6
    assert printed_intersection_dim(a, b) == 9  # the weighted variant diverges
    # ... but coincides on the worked pair, whose top level is the modulus
    c1, c2 = c1_c2()
    assert printed_intersection_dim(c1, c2) == 3


def test_free_sum_check():
    h, g, f = z4_factors()
    rep = free_sum_check(Z4, 7, NEG, h, f)
    assert rep.covers and not rep.lcp and rep.ell == 6

    rep2 = free_sum_check(Z4, 7, NEG, h * f, g)
    assert rep2.covers and rep2.lcp and rep2.ell == 0

    rep3 = free_sum_check(Z4, 7, NEG, h, h)
    assert not rep3.covers


def test_mixed_lambda_dichotomy():
    f5g = ring("Fgamma:5^2")
    lam1 = 1
    lam2 = f5g.from_coeffs([2, 0])
    full1 = ConstacyclicCode.full_ring(f5g, 4, lam1)
    full2 = ConstacyclicCode.full_ring(f5g, 4, lam2)
    v = mixed_lambda_intersection(full1, full2)
    assert v.kind == "full" and v.degenerate_full_pair and not v.lcp_concluded

    zero1 = ConstacyclicCode.free(
        f5g, 4, lam1, x_pow_minus(f5g, 4, lam1)
    )
    v2 = mixed_lambda_intersection(zero1, full2)
    assert v2.kind == "zero" and v2.covers and v2.lcp_concluded

    with pytest.raises(SameResidueLambda):
        mixed_lambda_intersection(full1, full1)
    with pytest.raises(PreconditionFailed):
        nonfree = ConstacyclicCode.from_tower(
            f5g, 4, lam1, [support_poly(f5g, 4, lam1, {0}), Poly.one(f5g)]
        )
        mixed_lambda_intersection(nonfree, full2)


def test_constacyclic_lcd():
    h, g, f = z4_factors()
    assert constacyclic_lcd_check(Z4, 7, NEG, h, check=True)
    assert not constacyclic_lcd_check(Z4, 7, NEG, f, check=True)
    # pi(lambda) != pi(lambda)^{-1}: always complementary-dual
    f5g = ring("Fgamma:5^2")
    lam2 = f5g.from_coeffs([2, 0])
    full_div = x_pow_minus(f5g, 4, lam2)
    assert constacyclic_lcd_check(f5g, 4, lam2, full_div, check=True)
    assert constacyclic_lcd_check(f5g, 4, lam2, Poly.one(f5g), check=True)

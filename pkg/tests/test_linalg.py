"""Span closure, dimensions, duals, standard form, and independence tests."""

import random

import pytest

from ringcodes.errors import (
    ClosureTooLarge,
    LengthMismatch,
    NotAChainRing,
    NotLocal,
    RingMismatch,
)
from ringcodes.linalg import (
    Code,
    CrtDimension,
    Matrix,
    all_submodules,
    closure_set,
    code_sum,
    dual,
    hull,
    identity_matrix,
    intersect,
    is_free,
    is_modular_independent,
    is_r_independent,
    kernel_in_code,
    key_of_vector,
    random_code,
    rank_q,
    rk_r,
    span_closure,
    span_keys,
    standard_form,
    vector_of_key,
    zero_matrix,
)
from ringcodes.rings import ring, u_ring


def u3_vec(*subsets):
    r = u_ring(3)
    return tuple(r.monomial(s) for s in subsets)


def test_span_closure_examples():
    z4 = ring("Z:2^2")
    c = span_closure(z4, 1, [(2,)])
    assert set(c.vectors()) == {(0,), (2,)}

    r3 = u_ring(3)
    c1 = span_closure(r3, 1, [(r3.monomial([2]),), (r3.monomial([3]),)])
    assert c1.size == 64

    c2 = span_closure(z4, 2, [(1, 2)])
    assert c2.size == 4
    assert set(c2.vectors()) == {(0, 0), (1, 2), (2, 0), (3, 2)}


def test_span_closure_bound():
    z4 = ring("Z:2^2")
    with pytest.raises(ClosureTooLarge):
        span_closure(z4, 3, identity_matrix(z4, 3).rows, bound=10)


def test_fast_span_agrees_with_closure():
    rng = random.Random(11)
    for spec, n in [("Z:2^2", 2), ("Z:2^3", 2), ("Fgamma:5^2", 2), ("U:2", 2), ("U:3", 1)]:
        r = ring(spec)
        for _ in range(25):
            rows = [
                tuple(rng.randrange(r.size) for _ in range(n))
                for _ in range(rng.randrange(0, 3))
            ]
            fast = set(span_keys(r, n, rows).tolist())
            slow = {key_of_vector(r, v) for v in closure_set(r, n, rows)}
            assert fast == slow


def test_dim_examples():
    z4 = ring("Z:2^2")
    assert Code.full(z4, 3).dim() == 6
    r3 = u_ring(3)
    c1 = Code(r3, 1, [(r3.monomial([2]),), (r3.monomial([3]),)])
    assert c1.dim() == 6
    assert Code(z4, 2, [(1, 2)]).dim() == 2


def test_rank_q_examples():
    z4 = ring("Z:2^2")
    assert rank_q(zero_matrix(z4, 2, 3)) == 0
    assert rank_q(identity_matrix(z4, 3)) == 6
    r3 = u_ring(3)
    m = Matrix(r3, [(r3.monomial([1, 2, 3]), 0)])
    assert rank_q(m) == 1
    with pytest.raises(NotLocal):
        rank_q(identity_matrix(ring("CRT(F:2,F:3)"), 2))


def test_dual_examples():
    z4 = ring("Z:2^2")
    full = Code.full(z4, 2)
    assert dual(full).size == 1

    two = Code(z4, 1, [(2,)])
    d = dual(two, method="oracle")
    assert set(d.vectors()) == {(0,), (2,)}

    for k in (1, 2, 3):
        r = u_ring(k)
        for s in range(1, k + 1):
            subset = list(range(1, s + 1))
            c = Code(r, 1, [(r.monomial([i]),) for i in subset])
            assert c.size == 2 ** (2**k - 2 ** (k - s))
            d = dual(c, method="oracle")
            assert d.size == 2 ** (2 ** (k - s))
            prod = Code(r, 1, [(r.monomial(subset),)])
            assert d.same_elements(prod)


def test_dual_structured_matches_oracle():
    rng = random.Random(5)
    for spec, n in [("Z:2^2", 2), ("Z:2^3", 1), ("Fgamma:3^2", 2), ("U:2", 2), ("F:5", 2)]:
        r = ring(spec)
        for _ in range(20):
            c = random_code(rng, r, n)
            assert dual(c).same_elements(dual(c, method="oracle"))


def test_dual_product_ring():
    z6 = ring("CRT(F:2,F:3)")
    c = Code(z6, 2, [(z6.from_int(3), z6.from_int(0))])
    d = dual(c)
    do = dual(c, method="oracle")
    assert d.same_elements(do)


def test_intersect_sum_hull():
    z4 = ring("Z:2^2")
    r3 = u_ring(3)

    c = Code(z4, 2, [(1, 2)])
    assert intersect(c, c).same_elements(c)
    assert code_sum(c, c).same_elements(c)

    c1 = Code(r3, 1, [(r3.monomial([2]),), (r3.monomial([3]),)])
    c2 = Code(r3, 1, [(r3.monomial([1]),), (r3.monomial([3]),)])
    inter = intersect(c1, c2)
    assert inter.dim() == 5
    regen = Code(r3, 1, [(r3.monomial([3]),), (r3.monomial([1, 2]),)])
    assert regen.same_elements(inter)

    two = Code(z4, 1, [(2,)])
    h = hull(two)
    assert h.same_elements(two) and h.dim() == 1


def test_pair_checks():
    z4 = ring("Z:2^2")
    f5 = ring("F:5")
    with pytest.raises(RingMismatch):
        intersect(Code.full(z4, 1), Code.full(f5, 1))
    with pytest.raises(LengthMismatch):
        intersect(Code.full(z4, 1), Code.full(z4, 2))


def test_kernel_in_code():
    z4 = ring("Z:2^2")
    full = Code.full(z4, 2)
    assert kernel_in_code(identity_matrix(z4, 2), full).size == 1
    assert kernel_in_code(zero_matrix(z4, 1, 2), full).same_elements(full)
    k = kernel_in_code(Matrix(z4, [(2, 0)]), full)
    assert k.dim() == 3
    assert k.dim() == full.dim() - rank_q(Matrix(z4, [(2, 0)]))


def test_rk_and_freeness():
    z4 = ring("Z:2^2")
    c = Code(z4, 2, [(1, 2)])
    assert rk_r(c) == 1 and is_free(c)
    two = Code(z4, 1, [(2,)])
    assert rk_r(two) == 1 and not is_free(two)
    r3 = u_ring(3)
    c1 = Code(r3, 1, [(r3.monomial([2]),), (r3.monomial([3]),)])
    assert rk_r(c1) == 2 and not is_free(c1)


def test_independence():
    z4 = ring("Z:2^2")
    assert is_modular_independent(z4, [(1, 0)])
    assert is_r_independent(z4, [(1, 0)])
    assert not is_modular_independent(z4, [(2,), (2,)])

    for k in (2, 3):
        r = u_ring(k)
        vecs = [(r.monomial([i]),) for i in range(1, k + 1)]
        assert is_modular_independent(r, vecs)
        assert not is_r_independent(r, vecs)

    with pytest.raises(ClosureTooLarge):
        is_modular_independent(u_ring(3), [(1,)] * 4, bound=100)


def test_standard_form():
    z4 = ring("Z:2^2")
    sf = standard_form(Matrix(z4, [(2, 0), (0, 2)]))
    assert sf.profile == (0, 2)
    assert sf.rows == ((2, 0), (0, 2))

    # span of {(1,2),(2,0)} is just <(1,2)>: (2,0) = 2*(1,2)
    sf2 = standard_form(Matrix(z4, [(1, 2), (2, 0)]))
    assert sf2.profile == (1, 0)
    assert 2 ** sf2.log_size == len(closure_set(z4, 2, [(1, 2), (2, 0)]))

    sf3 = standard_form(Matrix(z4, [(1, 2), (0, 2)]))
    assert sf3.profile == (1, 1)
    assert 2 ** sf3.log_size == 8

    # Howell property: the tail (0,2) of (2,1) must appear
    sf4 = standard_form(Matrix(z4, [(2, 1)]))
    assert sf4.profile == (0, 2)
    assert 2 ** sf4.log_size == len(closure_set(z4, 2, [(2, 1)]))

    with pytest.raises(NotAChainRing):
        standard_form(identity_matrix(u_ring(2), 1))


def test_standard_form_rank_matches_closure_randomized():
    rng = random.Random(7)
    for spec, n in [("Z:2^2", 3), ("Z:3^2", 2), ("Fgamma:5^2", 2), ("Z:2^3", 2)]:
        r = ring(spec)
        for _ in range(30):
            rows = [
                tuple(rng.randrange(r.size) for _ in range(n))
                for _ in range(rng.randrange(0, n + 2))
            ]
            sf = standard_form(Matrix(r, rows, n))
            assert r.q**sf.log_size == len(closure_set(r, n, rows))
            # row span is preserved
            assert set(span_keys(r, n, sf.rows).tolist()) == {
                key_of_vector(r, v) for v in closure_set(r, n, rows)
            }


def test_duality_identity_exhaustive_small():
    for spec, n in [("Z:2^2", 1), ("Fgamma:5^2", 1)]:
        r = ring(spec)
        for c in all_submodules(r, n):
            d = dual(c)
            assert c.dim() + d.dim() == n * r.omega
            assert dual(d).same_elements(c)


def test_all_submodules_counts():
    assert len(all_submodules(ring("Z:2^2"), 1)) == 3
    assert len(all_submodules(ring("Z:2^2"), 2)) == 15
    assert len(all_submodules(ring("Fgamma:5^2"), 1)) == 3
    assert len(all_submodules(u_ring(2), 1)) == 7


def test_crt_dimension_and_product_rules():
    z12 = ring("CRT(Z:2^2,F:3)")
    c = Code(z12, 2, [(z12.from_int(3), z12.from_int(4))])
    d = c.dim()
    assert isinstance(d, CrtDimension)
    sizes = [c.project(j).size for j in range(2)]
    assert c.size == sizes[0] * sizes[1]
    assert rk_r(c) == max(rk_r(c.project(0)), rk_r(c.project(1)))
    # free iff all components free with the same rank
    assert is_free(c) == (
        is_free(c.project(0))
        and is_free(c.project(1))
        and rk_r(c.project(0)) == rk_r(c.project(1))
    )


def test_crt_dimension_value():
    d = CrtDimension(((2, 2), (3, 2)))
    assert d.value == 2.0 and d == 2
    mixed = CrtDimension(((2, 2), (3, 1)))
    assert mixed != 2
    import math

    expect = (2 * math.log(2) + math.log(3)) / math.log(6)
    assert abs(mixed.value - expect) < 1e-12


def test_pack_roundtrip():
    r = ring("Fgamma:5^2")
    vec = (3, 17, 0, 24)
    assert vector_of_key(r, 4, key_of_vector(r, vec)) == vec


def test_matrix_parse_and_str():
    f5g = ring("Fgamma:5^2")
    m = Matrix.parse(f5g, [["[2,3]", "-1"], [0, "[0,1]"]])
    assert m.rows == ((f5g.from_coeffs([2, 3]), f5g.from_coeffs([4, 0])),
                      (0, f5g.gamma))
    assert str(m).splitlines()[0] == "[[2,3] [4,0]]"


def test_matrix_ops():
    z4 = ring("Z:2^2")
    a = Matrix(z4, [(1, 2), (0, 1)])
    b = Matrix(z4, [(1, 0), (1, 1)])
    assert (a @ b).rows == ((3, 2), (1, 1))
    assert a.transpose().rows == ((1, 0), (2, 1))
    assert a.vstack(b).nrows == 4
    empty = Matrix(z4, [], 2)
    assert empty.nrows == 0 and (empty @ a.transpose()).nrows == 0


def test_minimal_generator_matrix():
    from ringcodes.linalg import minimal_generator_matrix

    z4 = ring("Z:2^2")
    # redundant spanning set: (2, 0) = 2 * (1, 0)
    c = Code(z4, 2, [(1, 0), (2, 0), (0, 2)])
    m = minimal_generator_matrix(c)
    assert m.nrows == rk_r(c) == 2
    assert Code.from_matrix(m).same_elements(c)

    r2 = u_ring(2)
    radical = Code(r2, 1, [(r2.gens[0],), (r2.gens[1],), (r2.monomial([1, 2]),)])
    m2 = minimal_generator_matrix(radical)
    assert m2.nrows == 2  # u1u2 is redundant: u1u2 = u1 * u2


def test_code_generator_extraction():
    z4 = ring("Z:2^2")
    c = Code(z4, 2, [(1, 2), (0, 2)])
    keys_only = Code(z4, 2, keys=c.keys)
    regen = Code.from_matrix(keys_only.generator_matrix())
    assert regen.same_elements(c)

"""Gray map bijectivity, linearity, weights, and duality transport."""

import itertools

import pytest

from ringcodes.errors import NoSquareRootOfMinusOne, UnsupportedRing, ZeroCode
from ringcodes.gray import (
    GrayContext,
    find_alpha,
    gray_image_code,
    gray_inverse_vector,
    gray_map_element,
    gray_map_vector,
    gray_weight,
    min_weight,
)
from ringcodes.linalg import Code, dual, intersect
from ringcodes.rings import prime_field, ring

F5G = ring("Fgamma:5^2")


def test_find_alpha():
    assert find_alpha(5) == 2
    assert find_alpha(13) == 5
    with pytest.raises(NoSquareRootOfMinusOne):
        find_alpha(7)


def test_context_and_unsupported_rings():
    ctx = GrayContext.for_ring(F5G)
    assert ctx.q == 5 and ctx.alpha == 2
    with pytest.raises(UnsupportedRing):
        GrayContext.for_ring(ring("Z:2^2"))
    with pytest.raises(UnsupportedRing):
        GrayContext.for_ring(ring("Fgamma:3^2"))  # 3 != 1 mod 4
    with pytest.raises(UnsupportedRing):
        GrayContext.for_ring(ring("Fgamma:5^3"))  # t must be 2


def test_map_examples():
    assert gray_map_element(F5G, 0) == (0, 0)
    x = F5G.from_coeffs([1, 3])  # 1 + 3*gamma
    assert gray_map_element(F5G, x) == (2 * 3 % 5, (1 + 3) % 5) == (1, 4)


def test_bijective_roundtrip_exhaustive():
    for x in F5G.elements():
        img = gray_map_vector(F5G, (x,))
        assert gray_inverse_vector(F5G, img) == (x,)
    images = {gray_map_vector(F5G, (x,)) for x in F5G.elements()}
    assert len(images) == 25


def test_linearity_exhaustive_n1():
    # phi(x + c*y) = phi(x) + c*phi(y) over all of F5[gamma], scalars in F5
    q = 5
    for x in F5G.elements():
        for y in F5G.elements():
            for c in range(q):
                lhs = gray_map_element(F5G, F5G.add(x, F5G.mul(c, y)))
                px, py = gray_map_element(F5G, x), gray_map_element(F5G, y)
                rhs = ((px[0] + c * py[0]) % q, (px[1] + c * py[1]) % q)
                assert lhs == rhs


def test_weight_examples_and_preservation():
    g = F5G.gamma
    assert gray_weight(F5G, 0) == 0
    assert gray_weight(F5G, g) == 2
    one_m_g = F5G.from_coeffs([1, 4])  # a = 1, b = 4 = -1, a = -b
    assert gray_weight(F5G, one_m_g) == 1
    assert gray_map_element(F5G, one_m_g) == (3, 0)
    for x in F5G.elements():
        img = gray_map_element(F5G, x)
        assert gray_weight(F5G, x) == sum(1 for c in img if c)


def test_weight_preservation_exhaustive_n2():
    for vec in itertools.product(range(25), repeat=2):
        img = gray_map_vector(F5G, vec)
        assert gray_weight(F5G, vec) == sum(1 for c in img if c)


def test_gray_image_code():
    zero = Code.zero(F5G, 3)
    img0 = gray_image_code(zero)
    assert img0.size == 1 and img0.n == 6

    g = F5G.gamma
    c = Code(F5G, 3, [(g, g, g)])
    img = gray_image_code(c)
    assert img.size == 5
    assert min_weight(img, "hamming") == 6
    assert min_weight(c, "gray") == 6
    assert c.dim() == img.dim()


def test_min_weight_examples():
    f5 = prime_field(5)
    rep = Code(f5, 4, [(1, 1, 1, 1)])
    assert min_weight(rep) == 4
    assert min_weight(Code.full(f5, 3)) == 1
    with pytest.raises(ZeroCode):
        min_weight(Code.zero(f5, 2))


def test_gray_dual_transport_n2():
    # phi(C-dual) = phi(C)-dual, the identity the EAQEC distances rely on
    import random

    rng = random.Random(9)
    for _ in range(15):
        rows = [
            tuple(rng.randrange(25) for _ in range(2))
            for _ in range(rng.randrange(0, 3))
        ]
        c = Code(F5G, 2, rows)
        lhs = gray_image_code(dual(c), check=False)
        rhs = dual(gray_image_code(c, check=False), method="oracle")
        assert lhs.same_elements(rhs)


def test_dlip_transfer_small():
    g = F5G.gamma
    c1 = Code(F5G, 2, [(1, 1)])
    c2 = Code(F5G, 2, [(1, g)])
    ell = intersect(c1, c2).dim()
    img_ell = intersect(gray_image_code(c1), gray_image_code(c2)).dim()
    assert ell == img_ell

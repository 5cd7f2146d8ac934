"""The Gray isometry for F_q[gamma] (gamma^2 = 0) and weight enumeration.

phi(a + gamma b) = (alpha b, a + b) with alpha^2 = -1, extended
coordinatewise; it is an F_q-linear bijection onto F_q^{2n} that turns the
Gray weight into Hamming weight.  It needs q = 1 (mod 4) for alpha to
exist, and it respects duality: phi(C-dual) = phi(C)-dual.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import NoSquareRootOfMinusOne, UnsupportedRing, VerificationFailed, ZeroCode
from .linalg import Code, pack_matrix, span_keys, unpack_keys
from .rings import GammaChainRing, Ring, prime_field


def find_alpha(q: int) -> int:
    """Smallest alpha in 1..q-1 with alpha^2 = -1 mod q."""
    for alpha in range(1, q):
        if alpha * alpha % q == q - 1:
            return alpha
    raise NoSquareRootOfMinusOne(f"-1 is not a square mod {q} (q != 1 mod 4)")


def _gray_ring(ring: Ring) -> GammaChainRing:
    if not isinstance(ring, GammaChainRing) or ring.t != 2:
        raise UnsupportedRing(f"Gray map needs F_q[gamma] with gamma^2 = 0, got {ring}")
    if ring.q % 4 != 1:
        raise UnsupportedRing(f"Gray map needs q = 1 (mod 4), got q = {ring.q}")
    return ring


@dataclass(frozen=True)
class GrayContext:
    """Field size and the canonical square root of -1 used by the map."""

    q: int
    alpha: int

    @classmethod
    def for_ring(cls, ring: Ring) -> "GrayContext":
        r = _gray_ring(ring)
        return cls(r.q, find_alpha(r.q))


@functools.lru_cache(maxsize=None)
def _gray_tables(spec: str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(first image digit, second image digit, gray weight) per element index."""
    from .rings import ring as make_ring

    r = _gray_ring(make_ring(spec))
    q = r.q
    alpha = find_alpha(q)
    img1 = np.empty(r.size, dtype=np.int16)
    img2 = np.empty(r.size, dtype=np.int16)
    wt = np.empty(r.size, dtype=np.int16)
    for x in range(r.size):
        a, b = x % q, x // q
        img1[x] = alpha * b % q
        img2[x] = (a + b) % q
        if a == 0 and b == 0:
            wt[x] = 0
        elif b != 0 and a != (q - b) % q:
            wt[x] = 2
        else:
            wt[x] = 1
    return img1, img2, wt


def gray_map_element(ring: Ring, x: int) -> tuple[int, int]:
    img1, img2, _ = _gray_tables(_gray_ring(ring).spec())
    return int(img1[x]), int(img2[x])


def gray_map_vector(ring: Ring, vec) -> tuple:
    out = []
    for x in vec:
        out.extend(gray_map_element(ring, x))
    return tuple(out)


def gray_inverse_vector(ring: Ring, img) -> tuple:
    r = _gray_ring(ring)
    q = r.q
    alpha_inv = pow(find_alpha(q), q - 2, q)
    if len(img) % 2:
        raise UnsupportedRing("Gray image vectors have even length")
    out = []
    for i in range(0, len(img), 2):
        b = img[i] * alpha_inv % q
        a = (img[i + 1] - b) % q
        out.append(a + q * b)
    return tuple(out)


def gray_weight(ring: Ring, x) -> int:
    """0 / 1 / 2 per element (2 iff b != 0 and a != -b); vectors sum coords."""
    _, _, wt = _gray_tables(_gray_ring(ring).spec())
    if isinstance(x, (tuple, list)):
        return int(sum(int(wt[c]) for c in x))
    return int(wt[x])


def _gray_image_digits(ring: GammaChainRing, n: int, keys: np.ndarray) -> np.ndarray:
    """Image digit matrix over F_q, row i matching source key i."""
    img1, img2, _ = _gray_tables(ring.spec())
    vecs = unpack_keys(ring, n, keys)
    out = np.empty((len(keys), 2 * n), dtype=np.int16)
    for j in range(n):
        out[:, 2 * j] = img1[vecs[:, j]]
        out[:, 2 * j + 1] = img2[vecs[:, j]]
    return out


def gray_image_keys(ring: Ring, n: int, keys: np.ndarray) -> np.ndarray:
    """Sorted packed F_q^{2n} keys of the coordinatewise Gray image."""
    r = _gray_ring(ring)
    fq = prime_field(r.q)
    image = pack_matrix(fq, _gray_image_digits(r, n, keys))
    image.sort()
    return image


def gray_image_code(code: Code, check: bool = True) -> Code:
    """The Gray image as a code over F_q of doubled length.

    Asserts the image is F_q-linear of the same size, and that every
    codeword's Gray weight equals its image's Hamming weight (pointwise).
    """
    r = _gray_ring(code.ring)
    fq = prime_field(r.q)
    digits = _gray_image_digits(r, code.n, code.keys)
    image_keys = pack_matrix(fq, digits)
    order = np.argsort(image_keys)
    image = Code(fq, 2 * code.n, keys=image_keys[order])
    if check:
        if image.size != code.size:
            raise VerificationFailed("Gray image must be a bijection on codewords")
        basis = image.generator_matrix().rows
        span = span_keys(fq, 2 * code.n, basis)
        if len(span) != image.size or not np.array_equal(span, image.keys):
            raise VerificationFailed("Gray image is not F_q-linear")
        _, _, wt = _gray_tables(r.spec())
        vecs = unpack_keys(r, code.n, code.keys)
        gray_w = wt[vecs].sum(axis=1)
        ham_w = (digits != 0).sum(axis=1)
        if not np.array_equal(gray_w, ham_w):
            raise VerificationFailed("Gray map must carry gray weight to Hamming")
    return image


def min_weight(code: Code, metric: str = "hamming") -> int:
    """Minimum weight over nonzero codewords (exact enumeration)."""
    if code.size <= 1:
        raise ZeroCode("the zero code has no nonzero codewords")
    vecs = unpack_keys(code.ring, code.n, code.keys)
    if metric == "hamming":
        w = (vecs != 0).sum(axis=1)
    elif metric == "gray":
        _, _, wt = _gray_tables(_gray_ring(code.ring).spec())
        w = wt[vecs].sum(axis=1)
    else:
        raise ValueError(f"unknown metric {metric!r}")
    nz = w[w > 0]
    return int(nz.min())

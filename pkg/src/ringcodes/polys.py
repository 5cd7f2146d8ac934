"""Polynomials over chain rings, residue factorization, and Hensel lifting.

Ring polynomials are ascending coefficient tuples of element indices with
trailing zeros trimmed.  Residue-field polynomials are plain ``list[int]``
coefficient vectors mod q; the factorization of x^n - lambda happens there
and lifts gamma-adically, one digit of precision per step, so the lifted
factors multiply back to x^n - lambda exactly.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
from dataclasses import dataclass

from .errors import (
    NonUnitConstantTerm,
    NonUnitLeadingCoefficient,
    NotAUnit,
    NotCoprimeLength,
)
from .rings import ChainRing, Ring, require_chain

NEG_INF = float("-inf")


@dataclass(frozen=True)
class Poly:
    """Polynomial over a chain ring; coeffs ascending, trailing zeros trimmed."""

    ring: Ring
    coeffs: tuple

    def __post_init__(self):
        c = self.coeffs
        end = len(c)
        while end > 0 and c[end - 1] == 0:
            end -= 1
        if end != len(c):
            object.__setattr__(self, "coeffs", tuple(c[:end]))
        else:
            object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_coeffs(cls, ring: Ring, coeffs) -> "Poly":
        return cls(ring, tuple(ring.parse_element(c) for c in coeffs))

    @classmethod
    def zero(cls, ring: Ring) -> "Poly":
        return cls(ring, ())

    @classmethod
    def one(cls, ring: Ring) -> "Poly":
        return cls(ring, (ring.one,))

    @classmethod
    def x_pow(cls, ring: Ring, k: int, scale=None) -> "Poly":
        c = [ring.zero] * k + [scale if scale is not None else ring.one]
        return cls(ring, tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (self.ring.one,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def __add__(self, other: "Poly") -> "Poly":
        r = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(r, tuple(r.add(self[i], other[i]) for i in range(n)))

    def __sub__(self, other: "Poly") -> "Poly":
        r = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(r, tuple(r.sub(self[i], other[i]) for i in range(n)))

    def __neg__(self) -> "Poly":
        return Poly(self.ring, tuple(self.ring.neg(c) for c in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        r = self.ring
        if self.is_zero() or other.is_zero():
            return Poly.zero(r)
        out = [r.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                out[i + j] = r.add(out[i + j], r.mul(a, b))
        return Poly(r, tuple(out))

    def scale(self, s: int) -> "Poly":
        r = self.ring
        return Poly(r, tuple(r.mul(s, c) for c in self.coeffs))

    def shift(self, k: int) -> "Poly":
        if self.is_zero():
            return self
        return Poly(self.ring, (self.ring.zero,) * k + self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Exact division with remainder; divisor needs a unit leading coeff."""
        r = self.ring
        if other.is_zero() or not r.is_unit(other.coeffs[-1]):
            raise NonUnitLeadingCoefficient(
                "division requires a divisor with unit leading coefficient"
            )
        lead_inv = r.inv(other.coeffs[-1])
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(r), self
        quo = [r.zero] * (dq + 1)
        for i in range(dq, -1, -1):
            c = r.mul(rem[i + len(other.coeffs) - 1], lead_inv)
            if c == 0:
                continue
            quo[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] = r.sub(rem[i + j], r.mul(c, b))
        return Poly(r, tuple(quo)), Poly(r, tuple(rem))

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    def eval(self, x: int) -> int:
        r = self.ring
        acc = r.zero
        for c in reversed(self.coeffs):
            acc = r.add(r.mul(acc, x), c)
        return acc

    def reciprocal(self) -> "Poly":
        """x^deg * a(0)^{-1} * a(1/x); requires a unit constant term."""
        r = self.ring
        if self.is_zero() or not r.is_unit(self.coeffs[0]):
            raise NonUnitConstantTerm("reciprocal needs a unit constant term")
        inv0 = r.inv(self.coeffs[0])
        return Poly(r, tuple(r.mul(inv0, c) for c in reversed(self.coeffs)))

    def is_self_reciprocal(self) -> bool:
        return self == self.reciprocal()

    def residue(self) -> list[int]:
        """Coefficient vector of the image over F_q."""
        r = self.ring
        return fq_trim([r.residue(c) for c in self.coeffs])

    def __str__(self):
        r = self.ring
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            cs = r.str_element(c)
            if i == 0:
                terms.append(cs)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if cs == "1" else f"{cs}{xs}")
        return "+".join(terms)


def poly_arith(a: Poly, b: Poly, op: str):
    """Spec-level dispatch: add, mul, divmod, gcd_residue."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "divmod":
        return a.divmod(b)
    if op == "gcd_residue":
        return fq_gcd(a.residue(), b.residue(), a.ring.q)
    raise ValueError(f"unknown op {op!r}")


def x_pow_minus(ring: ChainRing, n: int, lam: int) -> Poly:
    """The modulus polynomial x^n - lambda."""
    c = [ring.neg(lam)] + [ring.zero] * (n - 1) + [ring.one]
    return Poly(ring, tuple(c))


def poly_product(ring: Ring, polys) -> Poly:
    out = Poly.one(ring)
    for p in polys:
        out = out * p
    return out


# ---------------------------------------------------------------------------
# residue field polynomials: list[int] coefficients mod q, trailing zeros cut


def fq_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def fq_add(a, b, q):
    n = max(len(a), len(b))
    return fq_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % q
                    for i in range(n)])


def fq_sub(a, b, q):
    n = max(len(a), len(b))
    return fq_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % q
                    for i in range(n)])


def fq_mul(a, b, q):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return fq_trim(out)


def fq_divmod(a, b, q):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], q - 2, q)
    rem = list(a)
    dq = len(a) - len(b)
    if dq < 0:
        return [], list(a)
    quo = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = rem[i + len(b) - 1] * inv % q
        if c:
            quo[i] = c
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - c * y) % q
    return fq_trim(quo), fq_trim(rem)


def fq_mod(a, b, q):
    return fq_divmod(a, b, q)[1]


def fq_monic(a, q):
    if not a:
        return []
    inv = pow(a[-1], q - 2, q)
    return [x * inv % q for x in a]


def fq_gcd(a, b, q):
    a, b = list(a), list(b)
    while b:
        a, b = b, fq_mod(a, b, q)
    return fq_monic(a, q)


def fq_modinv(a, m, q):
    """Inverse of a modulo m over F_q, via the extended Euclid algorithm."""
    r0, r1 = list(m), fq_mod(a, m, q)
    s0, s1 = [], [1]
    while r1:
        quo, rem = fq_divmod(r0, r1, q)
        r0, r1 = r1, rem
        s0, s1 = s1, fq_sub(s0, fq_mul(quo, s1, q), q)
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible modulo m")
    inv_lead = pow(r0[0], q - 2, q)
    return fq_mod([x * inv_lead % q for x in s0], m, q)


def fq_powmod(a, e, m, q):
    out = [1]
    base = fq_mod(a, m, q)
    while e > 0:
        if e & 1:
            out = fq_mod(fq_mul(out, base, q), m, q)
        base = fq_mod(fq_mul(base, base, q), m, q)
        e >>= 1
    return out


_X = [0, 1]

# Trial division handles candidate factor degrees up to this cap; beyond it
# the distinct/equal-degree machinery takes over.
TRIAL_DEGREE_CAP = 12


def _monic_candidates(d, q):
    """Monic degree-d polynomials in ascending lexicographic coefficient order."""
    for tail in itertools.product(range(q), repeat=d):
        yield list(tail) + [1]


def fq_factor_squarefree(f: list[int], q: int, seed: int = 0) -> list[list[int]]:
    """Irreducible factors of a monic square-free polynomial over F_q.

    Exhaustive monic trial division up to degree TRIAL_DEGREE_CAP keeps the
    common cases fully deterministic; equal-degree splitting (seeded, so
    still reproducible) handles anything with only large factors.
    """
    f = fq_monic(list(f), q)
    factors = []
    d = 1
    while 2 * d <= len(f) - 1 and d <= TRIAL_DEGREE_CAP:
        for cand in _monic_candidates(d, q):
            if len(f) - 1 < 2 * d:
                break
            quo, rem = fq_divmod(f, cand, q)
            if not rem:
                factors.append(cand)
                f = quo
        d += 1
    if len(f) - 1 > 0:
        if len(f) - 1 <= 2 * TRIAL_DEGREE_CAP:
            # any remaining factor would have been found by trial division
            factors.append(f)
        else:
            factors.extend(_ddf_edf(f, q, seed))
    return sorted(factors, key=lambda g: (len(g), tuple(g)))


def _ddf_edf(f: list[int], q: int, seed: int) -> list[list[int]]:
    """Distinct-degree then equal-degree splitting (square-free input)."""
    out = []
    rng = random.Random(seed or 0xC0DE)
    h = list(_X)
    d = 0
    while len(f) - 1 > 0:
        d += 1
        if 2 * d > len(f) - 1:
            out.append(f)
            break
        h = fq_powmod(h, q, f, q)
        g = fq_gcd(fq_sub(h, _X, q), f, q)
        if len(g) - 1 > 0:
            out.extend(_edf(g, d, q, rng))
            f, rem = fq_divmod(f, g, q)
            assert not rem
            h = fq_mod(h, f, q)
    return out


def _edf(g: list[int], d: int, q: int, rng) -> list[list[int]]:
    """Split a product of irreducibles of equal degree d."""
    if len(g) - 1 == d:
        return [fq_monic(g, q)]
    while True:
        r = [rng.randrange(q) for _ in range(len(g) - 1)]
        r = fq_trim(r)
        if len(r) <= 1:
            continue
        if q % 2 == 1:
            s = fq_powmod(r, (q**d - 1) // 2, g, q)
            s = fq_sub(s, [1], q)
        else:
            s = []
            acc = fq_mod(r, g, q)
            for _ in range(d):
                s = fq_add(s, acc, q)
                acc = fq_powmod(acc, 2, g, q)
        w = fq_gcd(s, g, q)
        if 0 < len(w) - 1 < len(g) - 1:
            quo, _ = fq_divmod(g, w, q)
            return _edf(w, d, q, rng) + _edf(quo, d, q, rng)


# ---------------------------------------------------------------------------
# Hensel lifting


def lift_poly(ring: ChainRing, c: list[int]) -> Poly:
    return Poly(ring, tuple(ring.lift(x) for x in c))


def hensel_lift_factors(ring: ChainRing, f: Poly, res_factors: list[list[int]]) -> list[Poly]:
    """Lift a pairwise-coprime monic residue factorization through gamma-adic
    precision t, so that the lifted product equals f exactly.
    """
    q, t = ring.q, ring.t
    lifts = [lift_poly(ring, g) for g in res_factors]
    if len(lifts) == 1:
        return [f]
    cofactors = []
    for i in range(len(res_factors)):
        co = [1]
        for j, g in enumerate(res_factors):
            if j != i:
                co = fq_mul(co, g, q)
        cofactors.append(co)
    bezout = [fq_modinv(co, g, q) for co, g in zip(cofactors, res_factors)]

    for m in range(1, t):
        err = f - poly_product(ring, lifts)
        if err.is_zero():
            break
        e_digits = [ring.digits(c)[m] for c in err.coeffs]
        for c in err.coeffs:
            assert ring.val(c) >= m, "error must vanish below current precision"
        e_poly = fq_trim(e_digits)
        gamma_m = ring.gamma_pow(m)
        for i, (g, a) in enumerate(zip(res_factors, bezout)):
            delta = fq_mod(fq_mul(e_poly, a, q), g, q)
            if not delta:
                continue
            bump = lift_poly(ring, delta).scale(gamma_m)
            lifts[i] = lifts[i] + bump
    assert poly_product(ring, lifts) == f, "lift must reproduce the modulus exactly"
    return lifts


@functools.lru_cache(maxsize=None)
def _factor_unital_cached(spec: str, n: int, lam: int, seed: int):
    from .rings import ring as make_ring

    r = require_chain(make_ring(spec))
    f = x_pow_minus(r, n, lam)
    res = fq_factor_squarefree(f.residue(), r.q, seed)
    lifted = hensel_lift_factors(r, f, res)
    lifted = sorted(lifted, key=lambda p: (len(p.coeffs), p.coeffs))
    assert poly_product(r, lifted) == f
    return tuple(lifted)


def factor_unital(ring: ChainRing, n: int, lam, seed: int = 0) -> list[Poly]:
    """Monic pairwise-coprime basic-irreducible factors of x^n - lambda.

    Requires gcd(n, q) = 1 (square-free residue) and lambda a unit.  Factors
    come back sorted by (degree, ascending coefficients), which fixes the
    indices used in tower notation everywhere else.
    """
    r = require_chain(ring)
    if not isinstance(lam, int) or not 0 <= lam < r.size:
        raise NotAUnit(f"lambda must be an element index of {r}")
    if not r.is_unit(lam):
        raise NotAUnit(f"lambda = {r.str_element(lam)} is not a unit")
    if n < 1 or math.gcd(n, r.q) != 1:
        raise NotCoprimeLength(f"need gcd(n, q) = 1; got n = {n}, q = {r.q}")
    return list(_factor_unital_cached(r.spec(), n, lam, seed))

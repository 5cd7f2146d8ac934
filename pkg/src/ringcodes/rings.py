"""Finite commutative rings with exact element arithmetic.

Supported families
------------------
* ``F:p``        prime field F_p
* ``Z:p^t``      integer chain ring Z/p^t
* ``Fgamma:q^t`` polynomial chain ring F_q[gamma]/(gamma^t), q prime
* ``U:k``        F_2[u_1..u_k] with u_i^2 = 0 (local, non-chain, Frobenius)
* ``CRT(...)``   finite product of local rings from the families above

Elements are represented as small integer indices ``0 .. size-1`` in a
fixed per-family encoding, so vectors are plain tuples of ints and the
enumeration heavy code elsewhere can run on numpy gather tables.  The
encoding of each family is documented on its class; ``coeffs``/``from_coeffs``
convert to the canonical coefficient representation used for I/O.

Rings are immutable after construction and cached by spec string, so two
rings with the same spec are the same object.  All operations are pure.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ComponentMismatch,
    NonPrimeModulus,
    NotAChainRing,
    NotAUnit,
    NotLocal,
    RingMismatch,
    UnsupportedFamily,
)

# Rings at or below this size get dense numpy add/mul tables.
TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (small moduli only)."""
    if n <= 1:
        return False
    if n <= 3:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class Ring:
    """Base class: exact arithmetic on element indices.

    Subclasses must set ``size`` and family metadata and implement the
    scalar operations.  ``q`` is the residue field size, ``t`` the
    nilpotency index of the maximal ideal and ``omega`` satisfies
    ``size == q ** omega`` (local families only).
    """

    size: int
    q: int | None
    t: int | None
    omega: int | None
    is_local = True
    is_chain = False
    zero = 0

    # -- scalar arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def is_unit(self, a: int) -> bool:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def pow(self, a: int, e: int) -> int:
        r = self.one
        base = a
        while e > 0:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    # -- structure ---------------------------------------------------------

    @property
    def one(self) -> int:
        return self._one

    def elements(self) -> range:
        """All elements in the fixed deterministic order."""
        return range(self.size)

    def units(self) -> list[int]:
        return [a for a in range(self.size) if self.is_unit(a)]

    def maximal_ideal(self) -> list[int]:
        """Non-units of a local ring (its unique maximal ideal)."""
        if not self.is_local:
            raise NotLocal(f"{self} is not local")
        return [a for a in range(self.size) if not self.is_unit(a)]

    def residue_field(self) -> "Ring":
        """Handle to F_q = R/m (local rings)."""
        if not self.is_local:
            raise NotLocal(f"{self} is not local")
        return ring(f"F:{self.q}")

    def residue(self, a: int) -> int:
        """Projection onto the residue field F_q, as an int in 0..q-1."""
        raise NotImplementedError

    def lift(self, r: int) -> int:
        """Canonical section of ``residue``: lift(r) has residue r."""
        raise NotImplementedError

    # -- canonical coefficient representation ------------------------------

    def coeffs(self, a: int):
        raise NotImplementedError

    def from_coeffs(self, c) -> int:
        raise NotImplementedError

    def str_element(self, a: int) -> str:
        c = self.coeffs(a)
        if isinstance(c, int):
            return str(c)
        return "[" + ",".join(str(x) for x in c) + "]"

    def parse_element(self, text) -> int:
        """Accept an int (reduced), a coefficient list, or their strings."""
        if isinstance(text, str):
            text = text.strip()
            if text.startswith("["):
                parts = [int(x) for x in text.strip("[]").split(",") if x.strip()]
                return self.from_coeffs(parts)
            return self.from_int(int(text))
        if isinstance(text, int):
            return self.from_int(text)
        return self.from_coeffs(list(text))

    def from_int(self, x: int) -> int:
        """Image of the integer x under the unique map Z -> R."""
        r = self.zero
        one = self.one
        x_mod = x % self.additive_char()
        for _ in range(x_mod):
            r = self.add(r, one)
        return r

    def additive_char(self) -> int:
        """Additive order of 1 (the characteristic)."""
        n = 1
        a = self.one
        while a != self.zero:
            a = self.add(a, self.one)
            n += 1
        return n

    def element(self, value) -> "RingElement":
        return RingElement(self, self.parse_element(value))

    # -- dense tables -------------------------------------------------------

    @functools.cached_property
    def tables(self) -> tuple[np.ndarray, np.ndarray] | None:
        """(ADD, MUL) gather tables for vectorized engines, or None."""
        if self.size > TABLE_LIMIT:
            return None
        s = self.size
        add = np.empty((s, s), dtype=np.int16)
        mul = np.empty((s, s), dtype=np.int16)
        for a in range(s):
            for b in range(a, s):
                v = self.add(a, b)
                add[a, b] = v
                add[b, a] = v
                w = self.mul(a, b)
                mul[a, b] = w
                mul[b, a] = w
        add.setflags(write=False)
        mul.setflags(write=False)
        return add, mul

    # -- misc ----------------------------------------------------------------

    def spec(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.spec()

    def __eq__(self, other):
        return isinstance(other, Ring) and self.spec() == other.spec()

    def __hash__(self):
        return hash(self.spec())


class ChainRing(Ring):
    """Mixin for rings whose maximal ideal is principal, m = <gamma>.

    Every element factors as gamma^v * unit; the digit decomposition
    a = sum_i gamma^i lift(e_i) underlies the echelon and Hensel code.
    """

    is_chain = True
    gamma: int

    def val(self, a: int) -> int:
        """gamma-adic valuation; val(0) = t."""
        raise NotImplementedError

    def unit_part(self, a: int) -> int:
        """u with a = gamma^val(a) * u; returns 1 for a = 0."""
        raise NotImplementedError

    def digit_split(self, a: int, v: int) -> tuple[int, int]:
        """(low, high) with a = low + gamma^v * high, digits of low below v."""
        raise NotImplementedError

    def gamma_pow(self, i: int) -> int:
        if i >= self.t:
            return self.zero
        return self._gamma_powers[i]

    def transversal(self, m: int) -> range:
        """Elements whose digits vanish from position m up; q^m of them."""
        raise NotImplementedError

    def digits(self, a: int) -> tuple[int, ...]:
        """Residue digits (e_0 .. e_{t-1}) with a = sum gamma^i lift(e_i)."""
        out = []
        for _ in range(self.t):
            low, high = self.digit_split(a, 1)
            out.append(self.residue(low))
            a = high
        return tuple(out)


class PrimeFieldRing(ChainRing):
    """F_p; element index equals its value in 0..p-1."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NonPrimeModulus(f"p = {p} is not prime")
        self.p = p
        self.size = p
        self.q = p
        self.t = 1
        self.omega = 1
        self._one = 1 % p
        self.gamma = 0
        self._gamma_powers = [self._one]

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotAUnit("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def residue(self, a):
        return a

    def lift(self, r):
        return r % self.p

    def coeffs(self, a):
        return a

    def from_coeffs(self, c):
        if isinstance(c, (list, tuple)):
            (c,) = c
        return c % self.p

    def from_int(self, x):
        return x % self.p

    def val(self, a):
        return 0 if a != 0 else 1

    def unit_part(self, a):
        return a if a != 0 else self._one

    def digit_split(self, a, v):
        if v <= 0:
            return 0, a
        return a, 0

    def transversal(self, m):
        return range(self.p if m >= 1 else 1)

    def spec(self):
        return f"F:{self.p}"


class ZChainRing(ChainRing):
    """Z/p^t; element index equals its value in 0..p^t-1, gamma = p."""

    def __init__(self, p: int, t: int):
        if not is_prime(p):
            raise NonPrimeModulus(f"p = {p} is not prime")
        if t < 1:
            raise UnsupportedFamily("nilpotency index must be >= 1")
        self.p = p
        self.t = t
        self.q = p
        self.omega = t
        self.size = p**t
        self.m = self.size
        self._one = 1
        self.gamma = p % self.size
        self._gamma_powers = [p**i % self.size for i in range(t)]

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise NotAUnit(f"{a} is not a unit in {self}")
        return pow(a, -1, self.m)

    def residue(self, a):
        return a % self.p

    def lift(self, r):
        return r % self.p

    def coeffs(self, a):
        return a

    def from_coeffs(self, c):
        if isinstance(c, (list, tuple)):
            (c,) = c
        return c % self.m

    def from_int(self, x):
        return x % self.m

    def val(self, a):
        if a == 0:
            return self.t
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def unit_part(self, a):
        if a == 0:
            return 1
        return a // self.p ** self.val(a)

    def digit_split(self, a, v):
        pv = self.p**v
        return a % pv, a // pv

    def transversal(self, m):
        return range(self.p ** min(m, self.t))

    def spec(self):
        return f"Z:{self.p}^{self.t}"


class GammaChainRing(ChainRing):
    """F_q[gamma]/(gamma^t), q prime.

    Element a_0 + a_1 gamma + ... + a_{t-1} gamma^{t-1} has index
    a_0 + a_1 q + ... + a_{t-1} q^{t-1} (digits base q are the coefficients).
    """

    def __init__(self, q: int, t: int):
        if not is_prime(q):
            raise NonPrimeModulus(f"q = {q} is not prime")
        if t < 1:
            raise UnsupportedFamily("nilpotency index must be >= 1")
        self.q = q
        self.t = t
        self.omega = t
        self.size = q**t
        self._one = 1
        self.gamma = q % self.size if t > 1 else 0
        self._gamma_powers = [q**i for i in range(t)]

    def _digits(self, a):
        q = self.q
        return [(a // q**i) % q for i in range(self.t)]

    def _join(self, digits):
        q = self.q
        return sum(d % q * q**i for i, d in enumerate(digits))

    def add(self, a, b):
        q = self.q
        out = 0
        mult = 1
        for _ in range(self.t):
            out += ((a + b) % q) * mult
            a //= q
            b //= q
            mult *= q
        return out

    def neg(self, a):
        q = self.q
        out = 0
        mult = 1
        for _ in range(self.t):
            out += (-a % q) * mult
            a //= q
            mult *= q
        return out

    def mul(self, a, b):
        q, t = self.q, self.t
        da = self._digits(a)
        db = self._digits(b)
        out = [0] * t
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j in range(t - i):
                out[i + j] = (out[i + j] + x * db[j]) % q
        return self._join(out)

    def is_unit(self, a):
        return a % self.q != 0

    def inv(self, a):
        if a % self.q == 0:
            raise NotAUnit(f"{self.str_element(a)} is not a unit in {self}")
        # Newton iteration: error 1 - a*b squares each step.
        b = pow(a % self.q, self.q - 2, self.q)
        two = self.add(self._one, self._one)
        while self.mul(a, b) != self._one:
            b = self.mul(b, self.sub(two, self.mul(a, b)))
        return b

    def residue(self, a):
        return a % self.q

    def lift(self, r):
        return r % self.q

    def coeffs(self, a):
        return self._digits(a)

    def from_coeffs(self, c):
        if isinstance(c, int):
            return c % self.q
        if len(c) > self.t:
            raise ValueError(f"expected at most {self.t} coefficients")
        return self._join(list(c) + [0] * (self.t - len(c)))

    def from_int(self, x):
        return x % self.q

    def val(self, a):
        if a == 0:
            return self.t
        v = 0
        while a % self.q == 0:
            a //= self.q
            v += 1
        return v

    def unit_part(self, a):
        if a == 0:
            return 1
        return a // self.q ** self.val(a)

    def digit_split(self, a, v):
        qv = self.q**v
        return a % qv, a // qv

    def transversal(self, m):
        return range(self.q ** min(m, self.t))

    def spec(self):
        return f"Fgamma:{self.q}^{self.t}"


class URing(Ring):
    """F_2[u_1..u_k] with all u_i^2 = 0; local non-chain Frobenius ring.

    F_2-basis: monomials u_A = prod_{i in A} u_i for A a subset of {1..k}
    (u_empty = 1).  An element's index is a bitmask whose bit at position
    ``mask(A)`` is the coefficient of u_A, so addition is XOR and
    |R| = 2^(2^k).
    """

    def __init__(self, k: int):
        if k < 1:
            raise UnsupportedFamily("U:k needs k >= 1")
        if k > 4:
            raise UnsupportedFamily("U:k supported for k <= 4 (|R| = 2^(2^k))")
        self.k = k
        self.q = 2
        self.t = k + 1
        self.omega = 2**k
        self.size = 2**self.omega
        self._one = 1
        self.gens = [1 << (1 << i) for i in range(k)]

    @staticmethod
    def _monomials(a):
        out = []
        pos = 0
        while a:
            if a & 1:
                out.append(pos)
            a >>= 1
            pos += 1
        return out

    def add(self, a, b):
        return a ^ b

    def neg(self, a):
        return a

    def mul(self, a, b):
        out = 0
        for ma in self._monomials(a):
            for mb in self._monomials(b):
                if ma & mb == 0:
                    out ^= 1 << (ma | mb)
        return out

    def is_unit(self, a):
        return bool(a & 1)

    def inv(self, a):
        if not a & 1:
            raise NotAUnit(f"{self.str_element(a)} is not a unit in {self}")
        # a = 1 + j with j nilpotent: inverse is the geometric series in j.
        j = a ^ 1
        out = 1
        p = 1
        for _ in range(self.k):
            p = self.mul(p, j)
            out ^= p
        return out

    def residue(self, a):
        return a & 1

    def lift(self, r):
        return r % 2

    def coeffs(self, a):
        return [(a >> m) & 1 for m in range(self.omega)]

    def from_coeffs(self, c):
        if isinstance(c, int):
            return c % 2
        if len(c) > self.omega:
            raise ValueError(f"expected at most {self.omega} coefficients")
        return sum((bit % 2) << m for m, bit in enumerate(c))

    def from_int(self, x):
        return x % 2

    def monomial(self, subset) -> int:
        """Element u_A for A given as an iterable of indices in 1..k."""
        mask = 0
        for i in subset:
            if not 1 <= i <= self.k:
                raise ValueError(f"generator index {i} out of range 1..{self.k}")
            mask |= 1 << (i - 1)
        return 1 << mask

    def spec(self):
        return f"U:{self.k}"


class ProductRing(Ring):
    """Finite product of local rings (the Chinese product).

    Elements are tuples of component elements; the index is their
    little-endian mixed-radix combination (first component varies fastest).
    """

    is_local = False

    def __init__(self, components: list[Ring]):
        if not components:
            raise UnsupportedFamily("CRT product needs at least one component")
        for c in components:
            if not c.is_local:
                raise UnsupportedFamily("CRT components must be local (no nesting)")
        self.components = tuple(components)
        self.sizes = tuple(c.size for c in components)
        self.size = math.prod(self.sizes)
        self.q = None
        self.t = None
        self.omega = None
        self._one = self.join([c.one for c in components])

    def split(self, a: int) -> tuple[int, ...]:
        out = []
        for s in self.sizes:
            out.append(a % s)
            a //= s
        return tuple(out)

    def join(self, parts) -> int:
        parts = list(parts)
        if len(parts) != len(self.components):
            raise ComponentMismatch(
                f"expected {len(self.components)} parts, got {len(parts)}"
            )
        out = 0
        for s, p in zip(reversed(self.sizes), reversed(parts)):
            if not 0 <= p < s:
                raise ComponentMismatch(f"part {p} out of range for size {s}")
            out = out * s + p
        return out

    def _map2(self, f, a, b):
        return self.join(
            f(c, x, y) for c, x, y in zip(self.components, self.split(a), self.split(b))
        )

    def add(self, a, b):
        return self._map2(lambda c, x, y: c.add(x, y), a, b)

    def neg(self, a):
        return self.join(c.neg(x) for c, x in zip(self.components, self.split(a)))

    def mul(self, a, b):
        return self._map2(lambda c, x, y: c.mul(x, y), a, b)

    def is_unit(self, a):
        return all(c.is_unit(x) for c, x in zip(self.components, self.split(a)))

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{self.str_element(a)} is not a unit in {self}")
        return self.join(c.inv(x) for c, x in zip(self.components, self.split(a)))

    def residue(self, a):
        raise NotLocal(f"{self} is not local; project a component instead")

    def lift(self, r):
        raise NotLocal(f"{self} is not local")

    def coeffs(self, a):
        return [c.coeffs(x) for c, x in zip(self.components, self.split(a))]

    def from_coeffs(self, c):
        if len(c) != len(self.components):
            raise ComponentMismatch(
                f"expected {len(self.components)} component encodings"
            )
        return self.join(r.from_coeffs(x) for r, x in zip(self.components, c))

    def str_element(self, a):
        inner = ",".join(
            c.str_element(x) for c, x in zip(self.components, self.split(a))
        )
        return f"[{inner}]"

    def integer_moduli(self) -> list[int] | None:
        """Component moduli p^t when every component is Z/p^t or F_p."""
        mods = []
        for c in self.components:
            if isinstance(c, (ZChainRing, PrimeFieldRing)):
                mods.append(c.size)
            else:
                return None
        return mods

    def from_int(self, x):
        mods = self.integer_moduli()
        if mods is None:
            return super().from_int(x)
        return self.join(x % m for m in mods)

    def to_int(self, a: int) -> int:
        """CRT-combine an element of an integer product back into Z/M."""
        mods = self.integer_moduli()
        if mods is None:
            raise UnsupportedFamily("to_int needs all components Z/p^t or F_p")
        m_all = math.prod(mods)
        x = 0
        for part, m in zip(self.split(a), mods):
            other = m_all // m
            x += part * other * pow(other, -1, m)
        return x % m_all

    def spec(self):
        return "CRT(" + ",".join(c.spec() for c in self.components) + ")"


@dataclass(frozen=True)
class RingElement:
    """A ring element tagged with its ring; thin operator sugar over indices."""

    ring: Ring
    index: int

    def _check(self, other):
        if not isinstance(other, RingElement):
            other = RingElement(self.ring, self.ring.parse_element(other))
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return RingElement(self.ring, self.ring.add(self.index, other.index))

    def __sub__(self, other):
        other = self._check(other)
        return RingElement(self.ring, self.ring.sub(self.index, other.index))

    def __mul__(self, other):
        other = self._check(other)
        return RingElement(self.ring, self.ring.mul(self.index, other.index))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.index))

    @property
    def coeffs(self):
        return self.ring.coeffs(self.index)

    def is_unit(self):
        return self.ring.is_unit(self.index)

    def inverse(self):
        return RingElement(self.ring, self.ring.inv(self.index))

    def __str__(self):
        return self.ring.str_element(self.index)


def arith(a: RingElement, b: RingElement, op: str) -> RingElement:
    """Spec-level scalar operation dispatch with ring checking."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# construction and parsing


@functools.lru_cache(maxsize=None)
def _cached_ring(spec: str) -> Ring:
    spec = spec.strip()
    if spec.startswith("CRT(") and spec.endswith(")"):
        inner = spec[4:-1]
        parts = []
        depth = 0
        start = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                parts.append(inner[start:i])
                start = i + 1
        parts.append(inner[start:])
        return ProductRing([_cached_ring(p) for p in parts])
    if ":" not in spec:
        raise UnsupportedFamily(f"cannot parse ring spec {spec!r}")
    family, _, arg = spec.partition(":")
    family = family.strip()
    arg = arg.strip()
    if family == "F":
        return PrimeFieldRing(int(arg))
    if family == "U":
        return URing(int(arg))
    if family in ("Z", "Fgamma", "Fq_gamma"):
        if "^" in arg:
            base_s, _, t_s = arg.partition("^")
            base, t = int(base_s), int(t_s)
        else:
            base, t = int(arg), 1
        if family == "Z":
            return PrimeFieldRing(base) if t == 1 else ZChainRing(base, t)
        return GammaChainRing(base, t)
    raise UnsupportedFamily(f"unknown ring family {family!r} in {spec!r}")


def ring(spec) -> Ring:
    """Construct (or fetch the cached) ring for a spec string or Ring."""
    if isinstance(spec, Ring):
        return spec
    return _cached_ring(str(spec))


def prime_field(p: int) -> PrimeFieldRing:
    return ring(f"F:{p}")


def integer_chain(p: int, t: int) -> Ring:
    return ring(f"Z:{p}^{t}")


def gamma_chain(q: int, t: int) -> GammaChainRing:
    return ring(f"Fgamma:{q}^{t}")


def u_ring(k: int) -> URing:
    return ring(f"U:{k}")


def crt_product(components) -> ProductRing:
    specs = ",".join(ring(c).spec() for c in components)
    return ring(f"CRT({specs})")


# ---------------------------------------------------------------------------
# structural queries


def loewy_invariants(r: Ring) -> tuple[int, ...]:
    """Loewy profile (mu_0 .. mu_{t-1}), mu_i = log_q |m^i| / |m^{i+1}|.

    Computed by enumerating the ideal powers m^i, so it doubles as an
    independent check on the family metadata.
    """
    if not r.is_local:
        raise NotLocal(f"{r} is not local")
    if isinstance(r, URing):
        gens = list(r.gens)
    elif isinstance(r, ChainRing):
        gens = [r.gamma] if r.t > 1 else []
    else:  # pragma: no cover - all local families covered above
        gens = [a for a in r.maximal_ideal() if a != r.zero]

    sizes = [r.size]
    power_gens = [r.one]
    for _ in range(1, r.t + 1):
        power_gens = sorted({r.mul(a, g) for a in power_gens for g in gens})
        ideal = {r.zero}
        for g in power_gens:
            multiples = {r.mul(x, g) for x in range(r.size)}
            ideal = {r.add(a, b) for a in ideal for b in multiples}
        sizes.append(len(ideal))
    assert sizes[-1] == 1, "m^t must vanish"

    mu = []
    for i in range(r.t):
        ratio = sizes[i] // sizes[i + 1]
        mu.append(round(math.log(ratio, r.q)))
        assert r.q ** mu[-1] == ratio
    return tuple(mu)


def ideal_power_sizes(r: Ring) -> list[int]:
    """|m^i| for i = 0..t, by the same enumeration as loewy_invariants."""
    mu = loewy_invariants(r)
    sizes = []
    for i in range(r.t + 1):
        sizes.append(r.q ** sum(mu[i:]))
    return sizes


def crt_decompose(r: ProductRing, a: int) -> tuple[int, ...]:
    """Components of an element of a product ring (the map Phi)."""
    if not isinstance(r, ProductRing):
        raise ComponentMismatch(f"{r} is not a CRT product")
    return r.split(a)


def crt_combine(r: ProductRing, parts) -> int:
    """Inverse of crt_decompose (the map CRT)."""
    if not isinstance(r, ProductRing):
        raise ComponentMismatch(f"{r} is not a CRT product")
    return r.join(parts)


def residue_project(r: Ring, a: int) -> int:
    if not r.is_local:
        raise NotLocal(f"{r} is not local")
    return r.residue(a)


def residue_lift(r: Ring, x: int) -> int:
    if not r.is_local:
        raise NotLocal(f"{r} is not local")
    return r.lift(x)


def require_chain(r: Ring) -> ChainRing:
    if not isinstance(r, ChainRing):
        raise NotAChainRing(f"{r} has no principal maximal ideal")
    return r

"""Constacyclic codes over chain rings via divisor towers.

With gcd(n, q) = 1 the modulus x^n - lambda factors into distinct basic
irreducible lifted factors, so every monic divisor is a product of a
subset of them.  A code is stored as its divisor tower (D_0 .. D_{t-1}),
D_{j+1} | D_j, meaning the ideal generated by {gamma^j D_j}; all gcd/lcm
manipulation happens on factor-index subsets, which keeps it exact and
canonical.  The elementwise oracle for every identity is the materialized
:class:`~ringcodes.linalg.Code`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import (
    BrokenChain,
    CanonicalizationMismatch,
    MismatchedConstacyclicity,
    NotADivisor,
    PreconditionFailed,
    SameResidueLambda,
    VerificationFailed,
)
from .linalg import Code, code_sum, dual as linalg_dual, intersect, vec_scale
from .polys import Poly, factor_unital, poly_product, x_pow_minus
from .rings import ChainRing, require_chain


@functools.lru_cache(maxsize=None)
def _factor_list(spec: str, n: int, lam: int) -> tuple[Poly, ...]:
    from .rings import ring as make_ring

    return tuple(factor_unital(make_ring(spec), n, lam))


def modulus_factors(ring: ChainRing, n: int, lam: int) -> tuple[Poly, ...]:
    """The sorted basic-irreducible factors of x^n - lambda (cached)."""
    return _factor_list(ring.spec(), n, lam)


def divisor_support(ring: ChainRing, n: int, lam: int, poly: Poly) -> frozenset:
    """Factor-index set of a monic divisor of x^n - lambda."""
    factors = modulus_factors(ring, n, lam)
    if not poly.is_monic():
        raise NotADivisor(f"{poly} is not monic")
    rem = poly
    support = set()
    for i, f in enumerate(factors):
        if rem.degree >= f.degree and (rem % f).is_zero():
            support.add(i)
            rem = rem // f
    if not rem.is_one():
        raise NotADivisor(f"{poly} does not divide x^{n}-{ring.str_element(lam)}")
    return frozenset(support)


def support_poly(ring: ChainRing, n: int, lam: int, support) -> Poly:
    factors = modulus_factors(ring, n, lam)
    return poly_product(ring, [factors[i] for i in sorted(support)])


def support_degree(ring: ChainRing, n: int, lam: int, support) -> int:
    factors = modulus_factors(ring, n, lam)
    return sum(factors[i].degree for i in support)


def constashift(ring: ChainRing, lam: int, vec: tuple) -> tuple:
    """(lam * v_{n-1}, v_0, ..., v_{n-2}): multiplication by x mod x^n - lam."""
    return (ring.mul(lam, vec[-1]),) + vec[:-1]


def _level_shift_vectors(ring: ChainRing, n: int, lam: int, level: int, poly: Poly):
    """The n lambda-shifts of gamma^level * poly as length-n vectors."""
    if poly.degree >= n:  # the modulus itself vanishes in the quotient
        return []
    base = vec_scale(ring, ring.gamma_pow(level), tuple(poly[i] for i in range(n)))
    out = []
    vec = base
    for _ in range(n):
        out.append(vec)
        vec = constashift(ring, lam, vec)
    return out


def materialize_generator_divisors(ring: ChainRing, n: int, lam: int, gens) -> Code:
    """Code generated by {gamma^j G_j} without any tower normalization."""
    vectors = []
    for j, g in enumerate(gens):
        vectors.extend(_level_shift_vectors(ring, n, lam, j, g))
    return Code(ring, n, vectors)


class ConstacyclicCode:
    """A lambda-constacyclic code given by its divisor tower."""

    def __init__(self, ring: ChainRing, n: int, lam: int, supports):
        require_chain(ring)
        self.ring = ring
        self.n = n
        self.lam = lam
        supports = tuple(frozenset(s) for s in supports)
        if len(supports) != ring.t:
            raise BrokenChain(f"tower needs {ring.t} levels, got {len(supports)}")
        for a, b in zip(supports, supports[1:]):
            if not b.issubset(a):
                raise BrokenChain("tower must descend: D_{j+1} must divide D_j")
        self.supports = supports
        self._code = None
        self._canonical = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_tower(cls, ring: ChainRing, n: int, lam: int, tower) -> "ConstacyclicCode":
        """Tower of divisor polynomials (D_0 .. D_{t-1}), chain enforced."""
        supports = []
        for d in tower:
            if isinstance(d, (set, frozenset)):
                supports.append(frozenset(d))
            else:
                supports.append(divisor_support(ring, n, lam, d))
        return cls(ring, n, lam, supports)

    @classmethod
    def from_generator_divisors(
        cls, ring: ChainRing, n: int, lam: int, gens
    ) -> "ConstacyclicCode":
        """Ideal <{gamma^j G_j}> for arbitrary monic divisors G_j.

        The equivalent chain tower is the prefix gcd D_j = gcd(G_0..G_j);
        over a square-free modulus this preserves the generated ideal.
        """
        supports = []
        acc = None
        for g in gens:
            s = g if isinstance(g, frozenset) else divisor_support(ring, n, lam, g)
            acc = s if acc is None else (acc & s)
            supports.append(acc)
        return cls(ring, n, lam, supports)

    @classmethod
    def free(cls, ring: ChainRing, n: int, lam: int, divisor) -> "ConstacyclicCode":
        """The free code <F>: every tower level equals F."""
        s = (
            divisor
            if isinstance(divisor, frozenset)
            else divisor_support(ring, n, lam, divisor)
        )
        return cls(ring, n, lam, [s] * ring.t)

    @classmethod
    def zero_code(cls, ring: ChainRing, n: int, lam: int) -> "ConstacyclicCode":
        full = frozenset(range(len(modulus_factors(ring, n, lam))))
        return cls(ring, n, lam, [full] * ring.t)

    @classmethod
    def full_ring(cls, ring: ChainRing, n: int, lam: int) -> "ConstacyclicCode":
        return cls(ring, n, lam, [frozenset()] * ring.t)

    # -- structure ----------------------------------------------------------

    @property
    def tower(self) -> tuple[Poly, ...]:
        return tuple(
            support_poly(self.ring, self.n, self.lam, s) for s in self.supports
        )

    def is_free(self) -> bool:
        return all(s == self.supports[0] for s in self.supports)

    def is_zero(self) -> bool:
        full = frozenset(range(len(modulus_factors(self.ring, self.n, self.lam))))
        return all(s == full for s in self.supports)

    def dim(self) -> int:
        """sum over levels of (n - deg D_j)."""
        return sum(
            self.n - support_degree(self.ring, self.n, self.lam, s)
            for s in self.supports
        )

    def generator_vectors(self) -> list[tuple]:
        """All lambda-shifts of gamma^j D_j, as length-n vectors."""
        out = []
        for j, s in enumerate(self.supports):
            poly = support_poly(self.ring, self.n, self.lam, s)
            out.extend(_level_shift_vectors(self.ring, self.n, self.lam, j, poly))
        return out

    def code(self) -> Code:
        """The materialized length-n module (cached)."""
        if self._code is None:
            self._code = Code(self.ring, self.n, self.generator_vectors())
        return self._code

    def canonical_tuple(self, check: bool = True) -> tuple[Poly, ...]:
        """The unique pairwise-coprime (F_0 .. F_t) with product x^n - lambda.

        Reading the tower supports S_j: F_{j+1} collects the factors that
        leave the tower between levels j-1 and j (S_{-1} is everything) and
        F_0 keeps whatever survives to the last level.  The defining
        properties are asserted: disjoint supports, full product, and the
        generators {gamma^j * (x^n-lambda)/F_{j+1}} regenerate the code.
        """
        if self._canonical is not None:
            return self._canonical
        ring, n, lam = self.ring, self.n, self.lam
        everything = frozenset(range(len(modulus_factors(ring, n, lam))))
        t = ring.t
        tuple_supports = [self.supports[t - 1]]  # F_0
        prev = everything
        for j in range(t):
            tuple_supports.append(prev - self.supports[j])
            prev = self.supports[j]
        seen = set()
        for s in tuple_supports:
            if seen & s:
                raise CanonicalizationMismatch("tuple supports are not disjoint")
            seen |= s
        if seen != everything:
            raise CanonicalizationMismatch("tuple product misses factors")
        polys = tuple(support_poly(ring, n, lam, s) for s in tuple_supports)
        if check:
            hats = [
                support_poly(ring, n, lam, everything - s)
                for s in tuple_supports[1:]
            ]
            regen = materialize_generator_divisors(ring, n, lam, hats)
            if not regen.same_elements(self.code()):
                raise CanonicalizationMismatch(
                    "canonical generators do not regenerate the code"
                )
        self._canonical = polys
        return polys

    def label(self) -> str:
        """Factor-index tower notation, e.g. 'D0=1,2;D1=2' ('D0=-' when empty)."""
        parts = []
        for j, s in enumerate(self.supports):
            inner = ",".join(str(i) for i in sorted(s)) if s else "-"
            parts.append(f"D{j}={inner}")
        return ";".join(parts)

    def __eq__(self, other):
        return (
            isinstance(other, ConstacyclicCode)
            and self.ring == other.ring
            and (self.n, self.lam, self.supports) == (other.n, other.lam, other.supports)
        )

    def __hash__(self):
        return hash((self.ring, self.n, self.lam, self.supports))

    def __repr__(self):
        lam = self.ring.str_element(self.lam)
        return f"ConstacyclicCode({self.ring}, n={self.n}, lam={lam}, {self.label()})"


def parse_tower_label(ring: ChainRing, n: int, lam: int, text: str) -> ConstacyclicCode:
    """Inverse of ConstacyclicCode.label()."""
    supports = []
    for part in text.strip().split(";"):
        part = part.strip()
        if "=" not in part:
            raise BrokenChain(f"bad tower component {part!r}")
        _, _, idxs = part.partition("=")
        idxs = idxs.strip()
        if idxs in ("-", ""):
            supports.append(frozenset())
        else:
            supports.append(frozenset(int(x) for x in idxs.split(",")))
        nfac = len(modulus_factors(ring, n, lam))
        if any(not 0 <= i < nfac for i in supports[-1]):
            raise NotADivisor(f"factor index out of range in {part!r}")
    return ConstacyclicCode(ring, n, lam, supports)


def all_towers(ring: ChainRing, n: int, lam: int) -> list[ConstacyclicCode]:
    """Every divisor tower over (ring, n, lambda), in sorted label order.

    Each factor independently picks the level where it leaves the tower,
    so there are (t+1)^r towers.
    """
    factors = modulus_factors(ring, n, lam)
    t = ring.t
    out = []
    import itertools

    for choice in itertools.product(range(t + 1), repeat=len(factors)):
        # factor i stays in the tower through the first choice[i] levels,
        # so S_j = {i : choice[i] > j}, already descending in j
        supports = [
            frozenset(i for i, c in enumerate(choice) if c > j) for j in range(t)
        ]
        out.append(ConstacyclicCode(ring, n, lam, supports))
    out.sort(key=lambda c: c.label())
    return out


# ---------------------------------------------------------------------------
# sizes, duals, intersections


def constacyclic_size(cc: ConstacyclicCode, check: bool = False) -> tuple[int, int]:
    """(|C|, |C-dual|) from the canonical tuple degree formulas."""
    ring = cc.ring
    q, t = ring.q, ring.t
    tup = cc.canonical_tuple(check=check)
    degs = [p.degree if p.degree != float("-inf") else 0 for p in tup]
    size = q ** sum((t - j) * degs[j + 1] for j in range(t))
    dual_exp = 0
    for j in range(1, t + 1):
        f_next = degs[j + 1] if j + 1 <= t else degs[0]
        dual_exp += j * f_next
    dual_size = q**dual_exp
    if check:
        mat = cc.code().size
        if mat != size:
            raise VerificationFailed(f"size formula {size} vs materialized {mat}")
    return size, dual_size


def constacyclic_dual(cc: ConstacyclicCode, check: bool = True) -> ConstacyclicCode:
    """Dual code via reciprocals of the canonical cofactors.

    The dual of a lambda-constacyclic code is lambda^{-1}-constacyclic;
    its generators are reciprocal(F_0-hat) at level 0 and
    gamma^j * reciprocal(F_{t-j+1}-hat) at level j.
    """
    ring, n, lam = cc.ring, cc.n, cc.lam
    t = ring.t
    lam_inv = ring.inv(lam)
    tup = cc.canonical_tuple(check=False)
    modulus = x_pow_minus(ring, n, lam)

    def hat(idx: int) -> Poly:
        return modulus // tup[idx]

    gens = [hat(0).reciprocal()]
    for j in range(1, t):
        gens.append(hat(t - j + 1).reciprocal())
    dual_cc = ConstacyclicCode.from_generator_divisors(ring, n, lam_inv, gens)
    if check:
        oracle = linalg_dual(cc.code())
        if not dual_cc.code().same_elements(oracle):
            raise VerificationFailed("constacyclic dual disagrees with module dual")
    return dual_cc


def constacyclic_intersection(
    c1: ConstacyclicCode, c2: ConstacyclicCode, check: bool = True
) -> tuple[ConstacyclicCode, int]:
    """Intersection tower (levelwise lcm) and its dimension formula.

    dim = sum over levels of (n - deg lcm(D_{1,j}, D_{2,j})); each level
    contributes once.  (A (t-j) weight on the terms would double-count the
    lower levels: it already disagrees with the elementwise count on free
    pairs, see printed_intersection_dim.)  With ``check`` the materialized
    elementwise intersection must agree with both the tower and the count.
    """
    if c1.ring != c2.ring or c1.n != c2.n:
        raise MismatchedConstacyclicity("codes live in different ambient spaces")
    if c1.lam != c2.lam:
        raise MismatchedConstacyclicity(
            "different lambda; use mixed_lambda_intersection"
        )
    ring, n, lam = c1.ring, c1.n, c1.lam
    supports = [a | b for a, b in zip(c1.supports, c2.supports)]
    inter = ConstacyclicCode(ring, n, lam, supports)
    dim = inter.dim()
    if check:
        oracle = intersect(c1.code(), c2.code())
        if dim != oracle.dim() or not inter.code().same_elements(oracle):
            raise VerificationFailed(
                "intersection tower or dimension formula disagrees with the oracle"
            )
    return inter, dim


def printed_intersection_dim(c1: ConstacyclicCode, c2: ConstacyclicCode) -> int:
    """The (t-j)-weighted variant of the level sum, kept for comparison.

    It coincides with the true dimension whenever the weighted terms
    collapse (as in towers whose top level is the whole modulus) but
    overcounts in general; see tests for a concrete divergence.
    """
    ring, n, lam = c1.ring, c1.n, c1.lam
    t = ring.t
    supports = [a | b for a, b in zip(c1.supports, c2.supports)]
    return sum(
        (t - j) * (n - support_degree(ring, n, lam, s))
        for j, s in enumerate(supports)
    )


@dataclass(frozen=True)
class FreeSumReport:
    covers: bool
    coprime: bool
    lcp: bool
    deg_sum: int
    ell: int


def free_sum_check(
    ring: ChainRing, n: int, lam: int, f1: Poly, f2: Poly, check: bool = True
) -> FreeSumReport:
    """For free codes <F1>, <F2>: covering means coprime divisors, and a
    complementary pair additionally needs deg(F1 F2) = n."""
    s1 = divisor_support(ring, n, lam, f1)
    s2 = divisor_support(ring, n, lam, f2)
    c1 = ConstacyclicCode.free(ring, n, lam, s1)
    c2 = ConstacyclicCode.free(ring, n, lam, s2)
    coprime = not (s1 & s2)
    deg_sum = f1.degree + f2.degree
    _, ell = constacyclic_intersection(c1, c2, check=False)
    lcp = coprime and deg_sum == n
    covers = coprime
    if check:
        total = code_sum(c1.code(), c2.code()).size
        really_covers = total == ring.size**n
        oracle_ell = intersect(c1.code(), c2.code()).dim()
        if really_covers != covers or oracle_ell != ell:
            raise VerificationFailed("free sum/cover analysis disagrees with oracle")
        from .pairs import is_lcp as pair_is_lcp

        if pair_is_lcp(c1.code(), c2.code()) != lcp:
            raise VerificationFailed("complementary-pair verdict disagrees")
    return FreeSumReport(covers, coprime, lcp, deg_sum, ell)


@dataclass(frozen=True)
class MixedLambdaVerdict:
    kind: str  # "zero" | "full" | "hypothesis_not_met"
    ell: int
    covers: bool
    lcp_concluded: bool
    degenerate_full_pair: bool


def mixed_lambda_intersection(
    c1: ConstacyclicCode, c2: ConstacyclicCode
) -> MixedLambdaVerdict:
    """Dichotomy for free codes with different residue constants.

    When the elementwise intersection is closed under both constashifts it
    must be {0} or all of R^n.  If additionally C1 + C2 = R^n and the
    intersection is trivial, the pair is complementary; the only covering
    pair in the "full" branch is C1 = C2 = R^n, which is flagged as the
    degenerate exception rather than called complementary.
    """
    if c1.ring != c2.ring or c1.n != c2.n:
        raise MismatchedConstacyclicity("codes live in different ambient spaces")
    ring, n = c1.ring, c1.n
    if ring.residue(c1.lam) == ring.residue(c2.lam):
        raise SameResidueLambda("residues of the two lambdas must differ")
    if not (c1.is_free() and c2.is_free()):
        raise PreconditionFailed("both codes must be free")
    inter = intersect(c1.code(), c2.code())
    keyset = set(inter.keys.tolist())
    closed = True
    from .linalg import key_of_vector

    for vec in inter.vectors():
        if key_of_vector(ring, constashift(ring, c1.lam, vec)) not in keyset:
            closed = False
            break
        if key_of_vector(ring, constashift(ring, c2.lam, vec)) not in keyset:
            closed = False
            break
    covers = code_sum(c1.code(), c2.code()).size == ring.size**n
    if not closed:
        return MixedLambdaVerdict("hypothesis_not_met", inter.dim(), covers, False, False)
    full = ring.size**n
    if inter.size == 1:
        kind = "zero"
    elif inter.size == full:
        kind = "full"
    else:
        raise VerificationFailed(
            f"shift-closed intersection of size {inter.size} is neither 0 nor R^n"
        )
    degenerate = kind == "full" and covers
    if degenerate and (c1.code().size != full or c2.code().size != full):
        raise VerificationFailed("full covering intersection from proper codes")
    lcp_concluded = kind == "zero" and covers
    if lcp_concluded:
        from .pairs import is_lcp as pair_is_lcp

        if not pair_is_lcp(c1.code(), c2.code()):
            raise VerificationFailed("complementary conclusion failed the oracle")
    return MixedLambdaVerdict(kind, inter.dim(), covers, lcp_concluded, degenerate)


def constacyclic_lcd_check(
    ring: ChainRing, n: int, lam: int, divisor: Poly, check: bool = True
) -> bool:
    """Complementary-dual test for the free code <F>.

    If the residue of lambda is its own inverse the verdict is
    "F is self-reciprocal"; otherwise the code is always complementary-dual.
    The self-reciprocal criterion is only sound when lambda^2 = 1 exactly
    (residue-only equality breaks it), so the oracle assertion stays on by
    default and fails loudly on such inputs.
    """
    s = divisor_support(ring, n, lam, divisor)
    res = ring.residue(lam)
    q = ring.q
    if res * res % q == 1:
        claimed = divisor.is_self_reciprocal()
    else:
        claimed = True
    if check:
        from .pairs import is_lcd

        cc = ConstacyclicCode.free(ring, n, lam, s)
        oracle = is_lcd(cc.code())
        if oracle != claimed:
            hint = ""
            if ring.mul(lam, lam) != ring.one:
                hint = " (lambda^2 != 1 exactly; the criterion needs it)"
            raise VerificationFailed(
                f"self-reciprocal test says {claimed} but the hull oracle says"
                f" {oracle}{hint}"
            )
    return claimed

"""Intersection-pair analysis over a local (or CRT product) ring.

The rank identities relating a pair's generator and parity-check matrices
to the dimension of the intersection all live here, each paired with the
elementwise oracle it must reproduce.  Everything is exact; "rank" always
means the log-cardinality of a row span.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    LengthMismatch,
    NotAChainRing,
    NotAParityCheck,
    PreconditionFailed,
    VerificationFailed,
)
from .linalg import (
    Code,
    CrtDimension,
    Matrix,
    code_sum,
    dual,
    hull,
    intersect,
    is_free,
    rank_q,
)
from .rings import ChainRing, ProductRing, crt_product


def dlip_ell(c: Code, d: Code):
    """dim of the intersection: the quantity every identity below targets."""
    return intersect(c, d).dim()


def _rank_product(a: Matrix, b: Matrix) -> int:
    """rank_q(a @ b^T), with empty factors contributing rank 0."""
    if a.nrows == 0 or b.nrows == 0:
        return 0
    return rank_q(a.mat_mul(b.transpose()))


def validate_parity_check(g: Matrix, h: Matrix):
    """Require H G^T = 0 and |span H| * |span G| = |R|^n."""
    if g.ring != h.ring or g.ncols != h.ncols:
        raise NotAParityCheck("generator and parity-check shapes disagree")
    ring, n = g.ring, g.ncols
    if g.nrows and h.nrows:
        if not h.mat_mul(g.transpose()).is_zero():
            raise NotAParityCheck("H G^T != 0")
    if rank_q(g) + rank_q(h) != n * ring.omega:
        raise NotAParityCheck("|span H| * |span G| != |R|^n")


@dataclass(frozen=True)
class RankCriterionReport:
    """Both sides of both displayed identities, plus the verdict."""

    ell: int
    rank_g1: int
    rank_g2: int
    rank_h2_g1t: int
    rank_h1_g2t: int
    holds: bool

    def sides(self):
        return (
            (self.rank_h2_g1t, self.rank_g1 - self.ell),
            (self.rank_h1_g2t, self.rank_g2 - self.ell),
        )


def check_rank_criterion(
    g1: Matrix, h1: Matrix, g2: Matrix, h2: Matrix, ell: int
) -> RankCriterionReport:
    """Is the pair an ell-intersection pair, judged by the rank identity?

    True iff rank(H2 G1^T) = rank(G1) - ell or rank(H1 G2^T) = rank(G2) - ell.
    """
    validate_parity_check(g1, h1)
    validate_parity_check(g2, h2)
    r1, r2 = rank_q(g1), rank_q(g2)
    s1 = _rank_product(h2, g1)
    s2 = _rank_product(h1, g2)
    holds = s1 == r1 - ell or s2 == r2 - ell
    return RankCriterionReport(ell, r1, r2, s1, s2, holds)


def stacked_rank_identity(g1: Matrix, g2: Matrix) -> tuple[int, int]:
    """(rank of stacked matrix, rank G1 + rank G2 - dim(C1 cap C2))."""
    lhs = rank_q(g1.vstack(g2))
    ell = dlip_ell(Code.from_matrix(g1), Code.from_matrix(g2))
    rhs = rank_q(g1) + rank_q(g2) - ell
    return lhs, rhs


def dual_pair_dim(c: Code, d: Code, check: bool = True):
    """dim(C-dual cap D-dual) = n*omega - dim C - dim D + dim(C cap D)."""
    n_omega = c.n * c.ring.omega
    value = n_omega - c.dim() - d.dim() + dlip_ell(c, d)
    if check:
        oracle = intersect(dual(c), dual(d)).dim()
        if oracle != value:
            raise VerificationFailed(
                f"dual-pair dimension identity: formula {value}, oracle {oracle}"
            )
    return value


@dataclass(frozen=True)
class GramHullReport:
    """Hull dimension from the Gram-matrix ranks, against the oracle."""

    from_g: int
    from_h: int
    oracle: int

    @property
    def consistent(self) -> bool:
        return self.from_g == self.from_h == self.oracle


def hull_dim_via_gram(g: Matrix, h: Matrix, check: bool = True) -> GramHullReport:
    """dim Hull(C) = rank(G) - rank(G G^T), and the parity-check variant."""
    validate_parity_check(g, h)
    from_g = rank_q(g) - _rank_product(g, g)
    from_h = rank_q(h) - _rank_product(h, h)
    oracle = hull(Code.from_matrix(g)).dim() if check else from_g
    report = GramHullReport(from_g, from_h, oracle)
    if check and not report.consistent:
        raise VerificationFailed(f"hull-via-Gram mismatch: {report}")
    return report


def is_lcd(c: Code) -> bool:
    """Complementary-dual: the hull vanishes."""
    return hull(c).size == 1


def covers_space(c: Code, d: Code) -> bool:
    return code_sum(c, d).size == c.ring.size**c.n


def is_lcp(c: Code, d: Code) -> bool:
    """Complementary pair: trivial intersection, free parts, full sum."""
    return (
        intersect(c, d).size == 1
        and covers_space(c, d)
        and is_free(c)
        and is_free(d)
    )


def residue_rank(mat: Matrix) -> int:
    """Rank of the entrywise residue projection over F_q (local rings)."""
    ring = mat.ring
    q = ring.q
    rows = [[ring.residue(x) for x in r] for r in mat.rows]
    rank = 0
    ncols = mat.ncols
    col = 0
    r = 0
    while r < len(rows) and col < ncols:
        piv = next((i for i in range(r, len(rows)) if rows[i][col] % q != 0), None)
        if piv is None:
            col += 1
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], q - 2, q)
        rows[r] = [(x * inv) % q for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] % q:
                f = rows[i][col]
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[r])]
        rank += 1
        r += 1
        col += 1
    return rank


def is_invertible(mat: Matrix) -> bool:
    """Square and residue-nonsingular (equivalent over a local ring)."""
    if mat.nrows != mat.ncols:
        return False
    return residue_rank(mat) == mat.ncols


@dataclass(frozen=True)
class LcpEquivalenceReport:
    is_lcp: bool
    stacked_g_invertible: bool
    stacked_h_invertible: bool
    rank_condition: bool
    covers: bool

    @property
    def statements(self) -> tuple[bool, bool, bool, bool]:
        return (
            self.is_lcp,
            self.stacked_g_invertible,
            self.stacked_h_invertible,
            self.rank_condition,
        )

    @property
    def all_agree(self) -> bool:
        return len(set(self.statements)) == 1


def lcp_equivalence_report(
    g1: Matrix, h1: Matrix, g2: Matrix, h2: Matrix
) -> LcpEquivalenceReport:
    """Evaluate the four equivalent complementary-pair statements.

    Both codes must be free (their generator matrices are bases).  The
    four statements are provably equivalent when C1 + C2 = R^n; the report
    carries the covering flag and the agreement is enforced in that case.
    """
    c1, c2 = Code.from_matrix(g1), Code.from_matrix(g2)
    if not (is_free(c1) and is_free(c2)):
        raise PreconditionFailed("both codes must be free")
    validate_parity_check(g1, h1)
    validate_parity_check(g2, h2)
    s1 = is_lcp(c1, c2)
    s2 = is_invertible(g1.vstack(g2))
    s3 = is_invertible(h1.vstack(h2))
    s4 = _rank_product(h2, g1) == rank_q(g1) or _rank_product(h1, g2) == rank_q(g2)
    covers = covers_space(c1, c2)
    report = LcpEquivalenceReport(s1, s2, s3, s4, covers)
    if covers and not report.all_agree:
        raise VerificationFailed(
            f"four-way complementary-pair equivalence split: {report}"
        )
    return report


@dataclass(frozen=True)
class CoverCheckVerdict:
    both_nonfree: bool
    ell: int
    free_pair: tuple[bool, bool]

    @property
    def applicable(self) -> bool:
        return self.both_nonfree


def nonfree_cover_check(c: Code, d: Code) -> CoverCheckVerdict:
    """Non-free covering pairs must intersect; trivial intersection forces freeness.

    Chain rings only (the projective-implies-free step needs them).
    """
    if not isinstance(c.ring, ChainRing):
        raise NotAChainRing(f"{c.ring} is not a chain ring")
    if not covers_space(c, d):
        raise PreconditionFailed("C + D must be all of R^n")
    ell = dlip_ell(c, d)
    free_c, free_d = is_free(c), is_free(d)
    verdict = CoverCheckVerdict(not free_c and not free_d, ell, (free_c, free_d))
    if verdict.both_nonfree and ell == 0:
        raise VerificationFailed(
            "non-free covering pair with trivial intersection found"
        )
    if ell == 0 and not (free_c and free_d):
        raise VerificationFailed("0-intersection covering pair with a non-free code")
    return verdict


def crt_pair_ell(components: list[tuple[Code, Code]], check: bool = True):
    """Intersection dimension of a pair assembled componentwise by CRT.

    Each (C_j, D_j) lives over its local component ring; all lengths must
    agree.  Returns the per-component dimension list; when every component
    has the same ell the derived scalar equals it exactly.
    """
    if not components:
        raise LengthMismatch("need at least one component pair")
    lengths = {c.n for c, _ in components} | {d.n for _, d in components}
    if len(lengths) != 1:
        raise LengthMismatch(f"component lengths differ: {sorted(lengths)}")
    n = lengths.pop()
    parts = []
    for c_j, d_j in components:
        if c_j.ring != d_j.ring:
            raise LengthMismatch("component pair rings differ")
        parts.append((c_j.ring.q, intersect(c_j, d_j).dim()))
    result = CrtDimension(tuple(parts))
    if check:
        product = crt_product([c.ring for c, _ in components])
        big_c = _embed_product_code(product, n, [c for c, _ in components])
        big_d = _embed_product_code(product, n, [d for _, d in components])
        oracle = intersect(big_c, big_d).dim()
        if oracle != result:
            raise VerificationFailed(
                f"CRT pair dimension: parts {result} vs oracle {oracle}"
            )
    return result


def _embed_product_code(product: ProductRing, n: int, comps: list[Code]) -> Code:
    rows = []
    zero_parts = [comp.zero for comp in product.components]
    for j, code in enumerate(comps):
        for r in code.generator_matrix().rows:
            parts = list(zero_parts)
            row = []
            for x in r:
                parts[j] = x
                row.append(product.join(parts))
            rows.append(tuple(row))
    return Code(product, n, rows)


@dataclass(frozen=True)
class PairAnalysis:
    """Everything the report path prints about one pair of codes."""

    ring: str
    n: int
    ell: object
    dims: tuple
    rank_g1: int
    rank_g2: int
    rank_stacked: int
    rank_h2_g1t: int
    rank_h1_g2t: int
    is_lcd_pair: bool
    is_lcp: bool
    covers_space: bool
    identities: dict = field(compare=False)

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "n": self.n,
            "ell": self.ell if isinstance(self.ell, int) else str(self.ell),
            "dims": list(self.dims),
            "ranks": {
                "g1": self.rank_g1,
                "g2": self.rank_g2,
                "stacked": self.rank_stacked,
                "h2_g1t": self.rank_h2_g1t,
                "h1_g2t": self.rank_h1_g2t,
            },
            "flags": {
                "is_lcd_pair": self.is_lcd_pair,
                "is_lcp": self.is_lcp,
                "covers_space": self.covers_space,
            },
            "identities": self.identities,
        }


def analyze_pair(c: Code, d: Code) -> PairAnalysis:
    """Full report: dimensions, every rank in the identity suite, flags.

    Local rings only; over CRT products use dlip_ell / crt_pair_ell.
    """
    if isinstance(c.ring, ProductRing):
        raise NotAChainRing("analyze_pair reports ranks over local rings only")
    ell = dlip_ell(c, d)
    g1, g2 = c.generator_matrix(), d.generator_matrix()
    dual_c, dual_d = dual(c), dual(d)
    h1 = dual_c.generator_matrix()
    h2 = dual_d.generator_matrix()
    lhs, rhs = stacked_rank_identity(g1, g2)
    identities = {
        "stacked_rank": {"lhs": lhs, "rhs": rhs},
        "dual_pair_dim": {
            "formula": c.n * c.ring.omega - c.dim() - d.dim() + ell,
        },
    }
    return PairAnalysis(
        ring=c.ring.spec(),
        n=c.n,
        ell=ell,
        dims=(c.dim(), d.dim()),
        rank_g1=rank_q(g1),
        rank_g2=rank_q(g2),
        rank_stacked=lhs,
        rank_h2_g1t=_rank_product(h2, g1),
        rank_h1_g2t=_rank_product(h1, g2),
        is_lcd_pair=d.same_elements(dual_c) and ell == 0,
        is_lcp=is_lcp(c, d),
        covers_space=covers_space(c, d),
        identities=identities,
    )

"""Entanglement-assisted quantum code parameters from intersection pairs.

An ell-intersection pair of classical [n, k_i, d_i]_q codes yields an
[[n, k_2 - ell, min(d_1-dual, d_2); k_1 - ell]]_q quantum code.  For a
pair of constacyclic codes over F_q[gamma] the Gray isometry doubles the
length and the emitted entanglement counts are k_i - ell; the tau report
carries the degree-formula variant alongside for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .constacyclic import (
    ConstacyclicCode,
    constacyclic_dual,
    constacyclic_intersection,
    support_degree,
)
from .errors import NegativeParameter
from .gray import _gray_ring, min_weight

_MISSING = object()


@dataclass(frozen=True)
class EaqecParams:
    """[[n, k, d; c]]_q with the ingredients that produced each entry."""

    n: int
    k: int
    d: int | None
    c: int
    q: int
    provenance: dict = field(default_factory=dict, compare=False)

    def __str__(self):
        d = self.d if self.d is not None else "?"
        return f"[[{self.n},{self.k},{d};{self.c}]]_{self.q}"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "c": self.c,
            "q": self.q,
            "provenance": self.provenance,
        }


def eaqec_from_lip(k1, d1, k2, d2, ell, d1perp, n, q) -> EaqecParams:
    """Direct parameter substitution for an ell-intersection pair."""
    if not 0 <= ell <= min(k1, k2):
        raise NegativeParameter(
            f"need 0 <= ell <= min(k1, k2); got ell={ell}, k1={k1}, k2={k2}"
        )
    defined = [x for x in (d1perp, d2) if x is not None]
    dist = min(defined) if defined else None
    return EaqecParams(
        n=n,
        k=k2 - ell,
        d=dist,
        c=k1 - ell,
        q=q,
        provenance={
            "k1": k1,
            "k2": k2,
            "ell": ell,
            "d1": d1,
            "d2": d2,
            "d1perp": d1perp,
        },
    )


@dataclass(frozen=True)
class TauReport:
    """Emitted entanglement parameters and the degree-formula variant.

    ``tau1``/``tau2`` are k_i - ell (what the quantum construction needs);
    ``formula_tau1``/``formula_tau2`` evaluate the printed degree formula,
    whose first lcm term indexes the tuple differently and does not reduce
    to k_i - ell in general.  ``matches`` records the comparison.
    """

    tau1: int
    tau2: int
    formula_tau1: int
    formula_tau2: int

    @property
    def matches(self) -> tuple[bool, bool]:
        return (self.tau1 == self.formula_tau1, self.tau2 == self.formula_tau2)


def eaqec_from_constacyclic_pair(
    c1: ConstacyclicCode,
    c2: ConstacyclicCode,
    distances: dict | None = None,
    check: bool = True,
) -> tuple[EaqecParams, TauReport]:
    """EAQEC parameters for a pair of constacyclic codes over F_q[gamma].

    Emits [[2n, tau_2, min(w1-dual, w2); tau_1]]_q with tau_i = k_i - ell
    and exact enumerated Gray distances (None for zero codes, whose minimum
    weight is undefined).  ``distances`` may supply cached values
    ``{"w2": ..., "w1perp": ...}``; sweep drivers use this to reuse
    per-tower enumeration.
    """
    ring = _gray_ring(c1.ring)
    n = c1.n
    k1, k2 = c1.dim(), c2.dim()
    _, ell = constacyclic_intersection(c1, c2, check=check)
    tau1, tau2 = k1 - ell, k2 - ell
    if tau1 < 0 or tau2 < 0:
        raise NegativeParameter(f"tau values ({tau1}, {tau2}) must be nonnegative")

    if distances is None:
        distances = {}
    w2 = distances.get("w2", _MISSING)
    if w2 is _MISSING:
        w2 = _gray_min_or_none(c2)
    w1perp = distances.get("w1perp", _MISSING)
    if w1perp is _MISSING:
        w1perp = _dual_gray_min_or_none(c1, check=check)
    defined = [x for x in (w1perp, w2) if x is not None]
    dist = min(defined) if defined else None

    report = TauReport(
        tau1=tau1,
        tau2=tau2,
        formula_tau1=_degree_formula_tau(c1, c2, 1),
        formula_tau2=_degree_formula_tau(c1, c2, 2),
    )
    params = EaqecParams(
        n=2 * n,
        k=tau2,
        d=dist,
        c=tau1,
        q=ring.q,
        provenance={
            "k1": k1,
            "k2": k2,
            "ell": ell,
            "w2": w2,
            "w1perp": w1perp,
            "formula_tau": [report.formula_tau1, report.formula_tau2],
            "formula_matches": list(report.matches),
        },
    )
    return params, report


def _gray_min_or_none(cc: ConstacyclicCode) -> int | None:
    code = cc.code()
    if code.size <= 1:
        return None
    return min_weight(code, "gray")


def _dual_gray_min_or_none(cc: ConstacyclicCode, check: bool = True) -> int | None:
    dual_cc = constacyclic_dual(cc, check=check)
    code = dual_cc.code()
    if code.size <= 1:
        return None
    return min_weight(code, "gray")


def _degree_formula_tau(c1: ConstacyclicCode, c2: ConstacyclicCode, which: int) -> int:
    """The printed degree formula for tau_i, evaluated literally.

    Hats follow the tuple convention hat(F_j) = (x^n - lambda) / F_j; the
    lcm degrees come from complement-support unions.
    """
    ring, n, lam = c1.ring, c1.n, c1.lam
    t1 = _tuple_supports(c1)
    t2 = _tuple_supports(c2)
    everything = frozenset(range(_n_factors(c1)))

    def deg(s) -> int:
        return support_degree(ring, n, lam, s)

    def lcm_hat_deg(j: int) -> int:
        return deg((everything - t1[j]) | (everything - t2[j]))

    own = t1 if which == 1 else t2
    return 2 * (deg(own[1]) + lcm_hat_deg(0)) + (deg(own[2]) + lcm_hat_deg(1)) - 3 * n


def _n_factors(cc: ConstacyclicCode) -> int:
    from .constacyclic import modulus_factors

    return len(modulus_factors(cc.ring, cc.n, cc.lam))


def _tuple_supports(cc: ConstacyclicCode) -> list[frozenset]:
    """Supports of the canonical tuple (F_0, F_1, F_2)."""
    everything = frozenset(range(_n_factors(cc)))
    s0, s1 = cc.supports
    return [s1, everything - s0, s0 - s1]

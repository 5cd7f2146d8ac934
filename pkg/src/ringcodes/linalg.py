"""Vectors, matrices and submodule codes over a finite ring.

Two layers cooperate here:

* a pure set-based *oracle* (:func:`span_closure`, :func:`dual` with
  ``method="oracle"``, elementwise intersections) that defines correctness;
* structured *fast paths* (chain-ring echelon form, F_2-linearized
  elimination for the ``U:k`` family, CRT products componentwise) that must
  agree with the oracle wherever the oracle is feasible.

Codes cache their full element set as a sorted array of packed integer
keys; all set operations (intersection, sum, dual filtering, hulls) reduce
to exact integer array operations.  Vectors at the API boundary are tuples
of element indices.
"""

from __future__ import annotations

import functools
import itertools
import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import (
    ClosureTooLarge,
    LengthMismatch,
    NotAPowerOfQ,
    NotLocal,
    RingMismatch,
)
from .rings import ChainRing, ProductRing, Ring, URing, require_chain

DEFAULT_ORACLE_BOUND = 2**22
DEFAULT_COEFF_BOUND = 2**24
_BOUND_ENV = "RINGCODES_ORACLE_BOUND"


def oracle_bound(bound: int | None = None) -> int:
    if bound is not None:
        return bound
    env = os.environ.get(_BOUND_ENV)
    return int(env) if env else DEFAULT_ORACLE_BOUND


# ---------------------------------------------------------------------------
# vectors


def vec_add(ring: Ring, u, v):
    return tuple(ring.add(a, b) for a, b in zip(u, v))


def vec_sub(ring: Ring, u, v):
    return tuple(ring.sub(a, b) for a, b in zip(u, v))


def vec_scale(ring: Ring, s, v):
    return tuple(ring.mul(s, a) for a in v)


def vec_dot(ring: Ring, u, v):
    acc = ring.zero
    for a, b in zip(u, v):
        acc = ring.add(acc, ring.mul(a, b))
    return acc


def is_zero_vec(v) -> bool:
    return all(a == 0 for a in v)


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable matrix of ring element indices; rows may be empty (r >= 0)."""

    __slots__ = ("ring", "rows", "ncols")

    def __init__(self, ring: Ring, rows, ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        if ncols < 1:
            raise ValueError("matrices need at least one column")
        for r in rows:
            if len(r) != ncols:
                raise LengthMismatch("ragged rows")
            for x in r:
                if not 0 <= x < ring.size:
                    raise ValueError(f"entry {x} out of range for {ring}")
        self.ring = ring
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def parse(cls, ring: Ring, rows, ncols: int | None = None) -> "Matrix":
        """Build from user-facing element encodings (ints, coeff lists, strings)."""
        return cls(ring, [[ring.parse_element(x) for x in r] for r in rows], ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def transpose(self) -> "Matrix":
        if not self.rows:
            raise ValueError("cannot transpose a matrix with no rows")
        return Matrix(self.ring, list(zip(*self.rows)), self.nrows)

    def mat_mul(self, other: "Matrix") -> "Matrix":
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if self.ncols != other.nrows:
            raise LengthMismatch(
                f"inner dimensions {self.ncols} and {other.nrows} differ"
            )
        cols = other.transpose().rows if other.rows else ()
        out = [
            [vec_dot(self.ring, r, c) for c in cols] for r in self.rows
        ]
        return Matrix(self.ring, out, other.ncols)

    def __matmul__(self, other):
        return self.mat_mul(other)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if self.ncols != other.ncols:
            raise LengthMismatch("column counts differ")
        return Matrix(self.ring, self.rows + other.rows, self.ncols)

    def is_zero(self) -> bool:
        return all(is_zero_vec(r) for r in self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.rows == other.rows
            and self.ncols == other.ncols
        )

    def __hash__(self):
        return hash((self.ring, self.rows, self.ncols))

    def __str__(self):
        r = self.ring
        return "\n".join(
            "[" + " ".join(r.str_element(x) for x in row) + "]" for row in self.rows
        )

    def __repr__(self):
        return f"Matrix({self.ring}, {self.nrows}x{self.ncols})"


def identity_matrix(ring: Ring, n: int) -> Matrix:
    return Matrix(
        ring, [[ring.one if i == j else 0 for j in range(n)] for i in range(n)], n
    )


def zero_matrix(ring: Ring, r: int, n: int) -> Matrix:
    return Matrix(ring, [[0] * n for _ in range(r)], n)


# ---------------------------------------------------------------------------
# key packing


def _pack_powers(ring: Ring, n: int):
    if n * math.log2(ring.size) >= 62:
        return None
    return np.array([ring.size**j for j in range(n)], dtype=np.int64)


def pack_matrix(ring: Ring, arr: np.ndarray) -> np.ndarray:
    powers = _pack_powers(ring, arr.shape[1])
    if powers is None:
        raise ClosureTooLarge(ring.size ** arr.shape[1], 2**62)
    return arr.astype(np.int64) @ powers


def unpack_keys(ring: Ring, n: int, keys: np.ndarray) -> np.ndarray:
    out = np.empty((len(keys), n), dtype=np.int16)
    rem = keys.astype(np.int64).copy()
    for j in range(n):
        out[:, j] = rem % ring.size
        rem //= ring.size
    return out


def key_of_vector(ring: Ring, v) -> int:
    key = 0
    for x in reversed(v):
        key = key * ring.size + x
    return key


def vector_of_key(ring: Ring, n: int, key: int) -> tuple:
    out = []
    for _ in range(n):
        key, r = divmod(key, ring.size)
        out.append(int(r))
    return tuple(out)


# ---------------------------------------------------------------------------
# the enumeration oracle


def closure_set(ring: Ring, n: int, rows, bound: int | None = None) -> frozenset:
    """Worklist closure of the row span: the ground-truth element set.

    Builds the submodule generated by ``rows`` one generator at a time,
    adding every scalar multiple of the new generator to every element
    collected so far.  Entirely structure-free; used to validate the fast
    enumeration paths.
    """
    bound = oracle_bound(bound)
    span = {tuple([ring.zero] * n)}
    scalars = list(ring.elements())
    for g in rows:
        g = tuple(g)
        if is_zero_vec(g):
            continue
        multiples = {vec_scale(ring, s, g) for s in scalars}
        new = set()
        for x in span:
            for w in multiples:
                new.add(vec_add(ring, x, w))
                if len(new) > bound:
                    raise ClosureTooLarge(len(new), bound)
        span = new
    return frozenset(span)


# ---------------------------------------------------------------------------
# chain-ring echelon (Howell-style) form


@dataclass(frozen=True)
class StandardForm:
    """Row-equivalent spanning set in gamma-echelon form over a chain ring.

    ``rows[i]`` leads at column ``cols[i]`` with entry exactly gamma^vals[i];
    ``profile[i]`` counts pivots of valuation i, so the row span has exactly
    q ** log_size elements.
    """

    ring: Ring
    n: int
    rows: tuple
    cols: tuple
    vals: tuple
    profile: tuple

    @property
    def log_size(self) -> int:
        t = self.ring.t
        return sum((t - i) * k for i, k in enumerate(self.profile))

    def matrix(self) -> Matrix:
        return Matrix(self.ring, self.rows, self.n)


def howell_form(ring: ChainRing, n: int, rows) -> StandardForm:
    """Deterministic echelon form whose rows span the same module.

    Pivot entries are normalized to pure powers gamma^v; for each pivot the
    annihilating multiple gamma^(t-v) * row re-enters the worklist so the
    form also spans the "torsion tails" (e.g. (2,1) over Z/4 yields (0,2)).
    Entries above a pivot are reduced to digits below the pivot valuation.
    """
    require_chain(ring)
    t = ring.t
    pivots: dict[int, tuple] = {}
    pivot_val: dict[int, int] = {}
    work = [tuple(r) for r in rows if not is_zero_vec(r)]
    work.reverse()  # pop() then processes rows in the given order
    while work:
        r = work.pop()
        while True:
            lead = next((c for c, x in enumerate(r) if x != 0), None)
            if lead is None:
                break
            v = ring.val(r[lead])
            if lead not in pivots:
                r = vec_scale(ring, ring.inv(ring.unit_part(r[lead])), r)
                pivots[lead] = r
                pivot_val[lead] = v
                tail = vec_scale(ring, ring.gamma_pow(t - v), r)
                if not is_zero_vec(tail):
                    work.append(tail)
                break
            pv = pivot_val[lead]
            if v >= pv:
                mult = ring.mul(
                    ring.gamma_pow(v - pv), ring.unit_part(r[lead])
                )
                r = vec_sub(ring, r, vec_scale(ring, mult, pivots[lead]))
            else:
                old = pivots[lead]
                r = vec_scale(ring, ring.inv(ring.unit_part(r[lead])), r)
                pivots[lead] = r
                pivot_val[lead] = v
                tail = vec_scale(ring, ring.gamma_pow(t - v), r)
                if not is_zero_vec(tail):
                    work.append(tail)
                work.append(old)
                break

    cols = sorted(pivots)
    # clear digits at and above each pivot's valuation in the other rows
    for c in cols:
        v = pivot_val[c]
        prow = pivots[c]
        for c2 in cols:
            if c2 == c:
                continue
            e = pivots[c2][c]
            if e == 0:
                continue
            _, high = ring.digit_split(e, v)
            if high != 0:
                pivots[c2] = vec_sub(
                    ring, pivots[c2], vec_scale(ring, ring.mul(high, ring.gamma_pow(v)), prow)
                )

    profile = [0] * t
    for c in cols:
        profile[pivot_val[c]] += 1
    return StandardForm(
        ring,
        n,
        tuple(pivots[c] for c in cols),
        tuple(cols),
        tuple(pivot_val[c] for c in cols),
        tuple(profile),
    )


def standard_form(mat: Matrix) -> StandardForm:
    """Public entry: chain rings only (NotAChainRing otherwise)."""
    require_chain(mat.ring)
    return howell_form(mat.ring, mat.ncols, mat.rows)


# ---------------------------------------------------------------------------
# F_2-linearized elimination for the U:k family


def _u_bits_of_vector(ring: URing, v) -> int:
    w = ring.omega
    out = 0
    for j, x in enumerate(v):
        out |= x << (j * w)
    return out


def _u_vector_of_bits(ring: URing, n: int, bits: int) -> tuple:
    w = ring.omega
    mask = (1 << w) - 1
    return tuple((bits >> (j * w)) & mask for j in range(n))


def f2_row_space(rows: list[int]) -> list[int]:
    """Basis of the F_2-span of bit-vector rows, reduced, sorted by leading bit."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            if lead not in basis:
                basis[lead] = r
                break
            r ^= basis[lead]
    # back-substitute for a reduced basis
    leads = sorted(basis, reverse=True)
    for i, li in enumerate(leads):
        for lj in leads[:i]:
            if (basis[lj] >> li) & 1:
                basis[lj] ^= basis[li]
    return [basis[l] for l in sorted(basis, reverse=True)]


def f2_kernel(rows: list[int], width: int) -> list[int]:
    """Basis of {x : for every row r, parity(r & x) = 0}."""
    # Transpose-free: eliminate, then read solutions off the free columns.
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            if lead in pivots:
                r ^= pivots[lead]
            else:
                pivots[lead] = r
                break
    # full reduction
    for lead in sorted(pivots, reverse=True):
        for lead2 in list(pivots):
            if lead2 != lead and (pivots[lead2] >> lead) & 1:
                pivots[lead2] ^= pivots[lead]
    pivot_cols = set(pivots)
    out = []
    for free in range(width):
        if free in pivot_cols:
            continue
        x = 1 << free
        for lead, row in pivots.items():
            if (row >> free) & 1:
                x |= 1 << lead
        out.append(x)
    return out


def _u_expand_rows(ring: URing, rows) -> list[int]:
    """F_2-spanning bit rows for the R-module generated by ``rows``."""
    monomials = [1 << m for m in range(ring.omega)]
    out = []
    for g in rows:
        for b in monomials:
            out.append(_u_bits_of_vector(ring, vec_scale(ring, b, g)))
    return out


def _u_span_keys(ring: URing, n: int, rows, bound: int) -> np.ndarray:
    basis = f2_row_space(_u_expand_rows(ring, rows))
    if 2 ** len(basis) > bound:
        raise ClosureTooLarge(2 ** len(basis), bound)
    if n * ring.omega >= 62:
        raise ClosureTooLarge(ring.size**n, 2**62)
    combos = [0]
    for b in basis:
        combos += [x ^ b for x in combos]
    keys = np.array(sorted(combos), dtype=np.int64)
    return keys


# ---------------------------------------------------------------------------
# fast span enumeration


def _chain_span_keys(ring: ChainRing, n: int, rows, bound: int) -> np.ndarray:
    sf = howell_form(ring, n, rows)
    total = ring.q**sf.log_size
    if total > bound:
        raise ClosureTooLarge(total, bound)
    if _pack_powers(ring, n) is None:
        raise ClosureTooLarge(ring.size**n, 2**62)
    tables = ring.tables
    t = ring.t
    if tables is None:
        vecs = [tuple([0] * n)]
        for row, v in zip(sf.rows, sf.vals):
            vecs = [
                vec_add(ring, x, vec_scale(ring, s, row))
                for s in ring.transversal(t - v)
                for x in vecs
            ]
        keys = np.array(sorted(key_of_vector(ring, x) for x in vecs), dtype=np.int64)
        return keys
    add, mul = tables
    v_arr = np.zeros((1, n), dtype=np.int16)
    for row, v in zip(sf.rows, sf.vals):
        scal = np.fromiter(ring.transversal(t - v), dtype=np.int16)
        scaled = mul[scal[:, None], np.array(row, dtype=np.int16)[None, :]]
        v_arr = add[v_arr[None, :, :], scaled[:, None, :]].reshape(-1, n)
    keys = pack_matrix(ring, v_arr)
    keys.sort()
    assert len(np.unique(keys)) == total, "echelon enumeration must be bijective"
    return keys


def _product_span_keys(ring: ProductRing, n: int, rows, bound: int) -> np.ndarray:
    comp_keys = []
    for idx, comp in enumerate(ring.components):
        comp_rows = [[ring.split(x)[idx] for x in r] for r in rows]
        comp_code = Code(comp, n, comp_rows)
        comp_keys.append([vector_of_key(comp, n, k) for k in comp_code.keys.tolist()])
    total = math.prod(len(k) for k in comp_keys)
    if total > bound:
        raise ClosureTooLarge(total, bound)
    if _pack_powers(ring, n) is None:
        raise ClosureTooLarge(ring.size**n, 2**62)
    keys = []
    for combo in itertools.product(*comp_keys):
        vec = tuple(ring.join(parts) for parts in zip(*combo))
        keys.append(key_of_vector(ring, vec))
    return np.array(sorted(keys), dtype=np.int64)


def span_keys(ring: Ring, n: int, rows, bound: int | None = None) -> np.ndarray:
    """Sorted packed keys of the submodule generated by ``rows``."""
    bound = oracle_bound(bound)
    rows = [tuple(r) for r in rows if not is_zero_vec(r)]
    if isinstance(ring, ChainRing):
        return _chain_span_keys(ring, n, rows, bound)
    if isinstance(ring, URing):
        return _u_span_keys(ring, n, rows, bound)
    if isinstance(ring, ProductRing):
        return _product_span_keys(ring, n, rows, bound)
    closure = closure_set(ring, n, rows, bound)  # pragma: no cover
    return np.array(
        sorted(key_of_vector(ring, v) for v in closure), dtype=np.int64
    )  # pragma: no cover


# ---------------------------------------------------------------------------
# codes


@dataclass(frozen=True)
class CrtDimension:
    """Per-component dimension of a code over a CRT product.

    ``parts`` lists (q_j, d_j); the derived scalar is exact whenever all
    the component dimensions agree.
    """

    parts: tuple

    @property
    def value(self) -> float:
        ds = {d for _, d in self.parts}
        if len(ds) == 1:
            return float(ds.pop())
        num = sum(d * math.log(q) for q, d in self.parts)
        den = math.log(math.prod(q for q, _ in self.parts))
        return num / den

    def __eq__(self, other):
        if isinstance(other, CrtDimension):
            return self.parts == other.parts
        if isinstance(other, (int, float)):
            return all(d == other for _, d in self.parts)
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        inner = ",".join(f"({q},{d})" for q, d in self.parts)
        return f"[{inner}]~{self.value:g}"


class Code:
    """A length-n submodule of R^n, given by a spanning set of rows.

    The full element set materializes lazily into ``keys`` (sorted packed
    integers) through the family-appropriate fast path; ``span_closure``
    provides the independent oracle for the same set.  Codes are immutable
    value objects; caches are write-once.
    """

    def __init__(self, ring: Ring, n: int, rows=None, keys: np.ndarray | None = None,
                 bound: int | None = None):
        if n < 1:
            raise LengthMismatch("codes need length n >= 1")
        self.ring = ring
        self.n = n
        self._rows = (
            None
            if rows is None
            else tuple(tuple(r) for r in rows)
        )
        if self._rows is not None:
            for r in self._rows:
                if len(r) != n:
                    raise LengthMismatch("generator row length differs from n")
        self._keys = keys
        self._bound = bound
        if self._rows is None and keys is None:
            raise ValueError("a code needs generators or an element set")

    @classmethod
    def parse(cls, ring: Ring, n: int, rows) -> "Code":
        return cls(ring, n, [[ring.parse_element(x) for x in r] for r in rows])

    @classmethod
    def from_matrix(cls, mat: Matrix) -> "Code":
        return cls(mat.ring, mat.ncols, mat.rows)

    @classmethod
    def zero(cls, ring: Ring, n: int) -> "Code":
        return cls(ring, n, rows=[])

    @classmethod
    def full(cls, ring: Ring, n: int) -> "Code":
        return cls(ring, n, rows=identity_matrix(ring, n).rows)

    @functools.cached_property
    def keys(self) -> np.ndarray:
        if self._keys is not None:
            keys = np.asarray(self._keys, dtype=np.int64)
            keys = np.unique(keys)
            return keys
        return span_keys(self.ring, self.n, self._rows, self._bound)

    @property
    def size(self) -> int:
        return len(self.keys)

    def dim(self):
        """log_q |C| for local rings; per-component list over CRT products."""
        if isinstance(self.ring, ProductRing):
            parts = []
            for j, comp in enumerate(self.ring.components):
                parts.append((comp.q, self.project(j).dim()))
            return CrtDimension(tuple(parts))
        return _exact_log(self.size, self.ring.q)

    def generator_matrix(self) -> Matrix:
        """A spanning matrix: the given rows, or rows recovered from keys."""
        if self._rows is not None:
            return Matrix(self.ring, self._rows, self.n)
        return Matrix(self.ring, self._extract_rows(), self.n)

    def _extract_rows(self):
        ring, n = self.ring, self.n
        target = self.size
        rows = []
        cur = {0}
        for key in self.keys.tolist():
            if len(cur) == target:
                break
            if key in cur:
                continue
            rows.append(vector_of_key(ring, n, key))
            cur = set(span_keys(ring, n, rows, self._bound).tolist())
        return rows

    def project(self, j: int) -> "Code":
        """Component image of a code over a CRT product ring."""
        ring = self.ring
        if not isinstance(ring, ProductRing):
            raise NotLocal(f"{ring} is not a CRT product")
        comp = ring.components[j]
        rows = self.generator_matrix().rows
        return Code(comp, self.n, [[ring.split(x)[j] for x in r] for r in rows])

    def contains(self, vector) -> bool:
        key = key_of_vector(self.ring, vector)
        i = int(np.searchsorted(self.keys, key))
        return i < len(self.keys) and int(self.keys[i]) == key

    def vectors(self):
        """All codewords, in packed-key order."""
        for key in self.keys.tolist():
            yield vector_of_key(self.ring, self.n, key)

    def key_bytes(self) -> bytes:
        return self.keys.tobytes()

    def same_elements(self, other: "Code") -> bool:
        _check_pair(self, other)
        return self.keys.shape == other.keys.shape and bool(
            np.array_equal(self.keys, other.keys)
        )

    def __eq__(self, other):
        if not isinstance(other, Code):
            return NotImplemented
        if self.ring != other.ring or self.n != other.n:
            return False
        return self.same_elements(other)

    def __hash__(self):
        return hash((self.ring, self.n, self.key_bytes()))

    def __repr__(self):
        return f"Code({self.ring}, n={self.n}, |C|={self.size})"


def _exact_log(size: int, q: int) -> int:
    d = round(math.log(size, q))
    for cand in (d - 1, d, d + 1):
        if cand >= 0 and q**cand == size:
            return cand
    raise NotAPowerOfQ(f"|C| = {size} is not a power of q = {q}")


def _check_pair(c: Code, d: Code):
    if c.ring != d.ring:
        raise RingMismatch(f"{c.ring} vs {d.ring}")
    if c.n != d.n:
        raise LengthMismatch(f"lengths {c.n} and {d.n} differ")


# ---------------------------------------------------------------------------
# spec-level operations


def span_closure(code_or_ring, n=None, rows=None, bound: int | None = None) -> Code:
    """Oracle path: materialize a span by pure worklist closure.

    Accepts either a Code (its generators are closed) or (ring, n, rows).
    The returned Code carries the oracle's element set directly.
    """
    if isinstance(code_or_ring, Code):
        ring, n, rows = (
            code_or_ring.ring,
            code_or_ring.n,
            code_or_ring.generator_matrix().rows,
        )
    else:
        ring = code_or_ring
    closure = closure_set(ring, n, rows, bound)
    keys = np.array(sorted(key_of_vector(ring, v) for v in closure), dtype=np.int64)
    return Code(ring, n, rows=rows, keys=keys)


def rank_q(mat: Matrix, bound: int | None = None) -> int:
    """log_q of the cardinality of the row span (local rings)."""
    ring = mat.ring
    if not ring.is_local:
        raise NotLocal(f"{ring} is not local")
    if isinstance(ring, ChainRing):
        return howell_form(ring, mat.ncols, mat.rows).log_size
    if isinstance(ring, URing):
        rows = [r for r in mat.rows if not is_zero_vec(r)]
        return len(f2_row_space(_u_expand_rows(ring, rows)))
    return Code(ring, mat.ncols, mat.rows, bound=bound).dim()  # pragma: no cover


def dual(code: Code, method: str = "auto", bound: int | None = None) -> Code:
    """The dual code under the standard inner product.

    ``oracle`` filters all of R^n; ``structured`` runs the chain-ring
    kernel construction, the F_2-linearized solve for U:k, or componentwise
    duals over CRT products.  ``auto`` prefers the structured path.
    """
    ring, n = code.ring, code.n
    if method == "oracle":
        return _dual_oracle(code, bound)
    if isinstance(ring, ChainRing):
        rows = _chain_kernel_rows(ring, n, code.generator_matrix().rows)
        return Code(ring, n, rows, bound=bound)
    if isinstance(ring, URing):
        rows = _u_dual_rows(ring, n, code)
        return Code(ring, n, rows, bound=bound)
    if isinstance(ring, ProductRing):
        comp_duals = [dual(code.project(j), bound=bound) for j in range(len(ring.components))]
        return _combine_product_code(ring, n, comp_duals, bound)
    return _dual_oracle(code, bound)  # pragma: no cover


def _dual_oracle(code: Code, bound: int | None = None) -> Code:
    ring, n = code.ring, code.n
    bound_v = oracle_bound(bound)
    total = ring.size**n
    if total > bound_v:
        raise ClosureTooLarge(total, bound_v)
    gens = code.generator_matrix().rows
    tables = ring.tables
    if tables is None or _pack_powers(ring, n) is None:
        vecs = [
            v
            for v in itertools.product(range(ring.size), repeat=n)
            if all(vec_dot(ring, v, g) == 0 for g in gens)
        ]
        keys = np.array(sorted(key_of_vector(ring, v) for v in vecs), dtype=np.int64)
        return Code(ring, n, keys=keys, bound=bound)
    add, mul = tables
    keys_all = np.arange(total, dtype=np.int64)
    mask = np.ones(total, dtype=bool)
    chunk = 1 << 20
    out = []
    for start in range(0, total, chunk):
        block = keys_all[start : start + chunk]
        vecs = unpack_keys(ring, n, block)
        good = np.ones(len(block), dtype=bool)
        for g in gens:
            acc = np.zeros(len(block), dtype=np.int16)
            for j in range(n):
                if g[j] == 0:
                    continue
                acc = add[acc, mul[vecs[:, j], g[j]]]
            good &= acc == 0
        out.append(block[good])
    del mask
    keys = np.concatenate(out)
    return Code(ring, n, keys=keys, bound=bound)


def _chain_kernel_rows(ring: ChainRing, n: int, rows) -> list:
    """Generators of {x : G x^T = 0} by diagonalizing G with column tracking."""
    t = ring.t
    m = [list(r) for r in rows if not is_zero_vec(r)]
    r_cnt = len(m)
    w = [[ring.one if i == j else 0 for j in range(n)] for i in range(n)]
    rank = 0
    vals = []
    for d in range(min(r_cnt, n)):
        best = None
        for i in range(d, r_cnt):
            for j in range(d, n):
                if m[i][j] != 0:
                    v = ring.val(m[i][j])
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            break
        v, bi, bj = best
        if bi != d:
            m[bi], m[d] = m[d], m[bi]
        if bj != d:
            for row in m:
                row[bj], row[d] = row[d], row[bj]
            for row in w:
                row[bj], row[d] = row[d], row[bj]
        u_inv = ring.inv(ring.unit_part(m[d][d]))
        m[d] = [ring.mul(u_inv, x) for x in m[d]]
        for i in range(d + 1, r_cnt):
            e = m[i][d]
            if e == 0:
                continue
            mult = ring.mul(ring.gamma_pow(ring.val(e) - v), ring.unit_part(e))
            m[i] = [ring.sub(x, ring.mul(mult, p)) for x, p in zip(m[i], m[d])]
        for j in range(d + 1, n):
            e = m[d][j]
            if e == 0:
                continue
            c = ring.mul(ring.gamma_pow(ring.val(e) - v), ring.unit_part(e))
            for row in m:
                row[j] = ring.sub(row[j], ring.mul(c, row[d]))
            for row in w:
                row[j] = ring.sub(row[j], ring.mul(c, row[d]))
        vals.append(v)
        rank += 1
    out = []
    for i, v in enumerate(vals):
        if v > 0:
            g = ring.gamma_pow(t - v)
            out.append(tuple(ring.mul(g, w[j][i]) for j in range(n)))
    for j in range(rank, n):
        out.append(tuple(w[i][j] for i in range(n)))
    return out


def _u_dual_rows(ring: URing, n: int, code: Code) -> list:
    """F_2-linearized solve for the annihilator of a U:k code."""
    w = ring.omega
    basis = f2_row_space(_u_expand_rows(ring, code.generator_matrix().rows))
    eq_rows = []
    for cbits in basis:
        c = _u_vector_of_bits(ring, n, cbits)
        for m_out in range(w):
            row = 0
            for j in range(n):
                cj = c[j]
                sub = m_out
                while True:  # iterate ma over submasks of m_out
                    if (cj >> (m_out ^ sub)) & 1:
                        row |= 1 << (j * w + sub)
                    if sub == 0:
                        break
                    sub = (sub - 1) & m_out
            eq_rows.append(row)
    sols = f2_kernel(eq_rows, n * w)
    return [_u_vector_of_bits(ring, n, s) for s in sols]


def _combine_product_code(ring: ProductRing, n: int, comps: list, bound) -> Code:
    rows = []
    for j, comp_code in enumerate(comps):
        for r in comp_code.generator_matrix().rows:
            rows.append(
                tuple(
                    ring.join(
                        [
                            r[i] if jj == j else ring.components[jj].zero
                            for jj in range(len(ring.components))
                        ]
                    )
                    for i in range(n)
                )
            )
    return Code(ring, n, rows, bound=bound)


def intersect(c: Code, d: Code) -> Code:
    """Elementwise intersection (the oracle for every intersection formula)."""
    _check_pair(c, d)
    if c.size > d.size:
        c, d = d, c
    keys = np.intersect1d(c.keys, d.keys, assume_unique=True)
    return Code(c.ring, c.n, keys=keys)


def code_sum(c: Code, d: Code, bound: int | None = None) -> Code:
    _check_pair(c, d)
    rows = c.generator_matrix().rows + d.generator_matrix().rows
    return Code(c.ring, c.n, rows, bound=bound)


def hull(c: Code, bound: int | None = None) -> Code:
    return intersect(c, dual(c, bound=bound))


def kernel_in_code(mat: Matrix, code: Code) -> Code:
    """The subcode {x in C : A x^T = 0}, by filtering C's element set."""
    ring = code.ring
    if mat.ring != ring:
        raise RingMismatch(f"{mat.ring} vs {ring}")
    if mat.ncols != code.n:
        raise LengthMismatch(f"matrix has {mat.ncols} columns, code length {code.n}")
    keys = code.keys
    tables = ring.tables
    if tables is None:
        good = [
            key_of_vector(ring, v)
            for v in code.vectors()
            if all(vec_dot(ring, a, v) == 0 for a in mat.rows)
        ]
        return Code(ring, code.n, keys=np.array(sorted(good), dtype=np.int64))
    add, mul = tables
    vecs = unpack_keys(ring, code.n, keys)
    good = np.ones(len(keys), dtype=bool)
    for a in mat.rows:
        acc = np.zeros(len(keys), dtype=np.int16)
        for j in range(code.n):
            if a[j] == 0:
                continue
            acc = add[acc, mul[vecs[:, j], a[j]]]
        good &= acc == 0
    return Code(ring, code.n, keys=keys[good])


def rk_r(code: Code) -> int:
    """Minimal number of generators (Nakayama: log_q |C| / |mC|)."""
    ring = code.ring
    if isinstance(ring, ProductRing):
        return max(rk_r(code.project(j)) for j in range(len(ring.components)))
    rows = code.generator_matrix().rows
    if isinstance(ring, URing):
        m_gens = ring.gens
    else:
        m_gens = [ring.gamma] if ring.t > 1 else []
    m_rows = [vec_scale(ring, g, r) for g in m_gens for r in rows]
    m_size = Code(ring, code.n, m_rows).size if m_rows else 1
    return _exact_log(code.size // m_size, ring.q)


def minimal_generator_matrix(code: Code) -> Matrix:
    """A minimal spanning set; for a free code this is a basis.

    Nakayama selection: keep a generator only if it leaves the span of the
    already-selected rows plus m*C (so the kept residues are independent
    in C/mC).  Local rings only.
    """
    ring = code.ring
    if isinstance(ring, ProductRing):
        raise NotLocal("minimal generating sets are extracted per component")
    rows = [r for r in code.generator_matrix().rows if not is_zero_vec(r)]
    if not rows:
        return Matrix(ring, [], code.n)
    if isinstance(ring, URing):
        m_gens = ring.gens
    else:
        m_gens = [ring.gamma] if ring.t > 1 else []
    m_rows = [vec_scale(ring, g, r) for g in m_gens for r in rows]
    selected: list = []
    for v in rows:
        span = set(span_keys(ring, code.n, selected + m_rows).tolist())
        if key_of_vector(ring, v) not in span:
            selected.append(v)
    got = span_keys(ring, code.n, selected)
    assert len(got) == code.size, "Nakayama selection must still span"
    assert len(selected) == rk_r(code)
    return Matrix(ring, selected, code.n)


def is_free(code: Code) -> bool:
    """Free iff |C| = |R|^rk; over CRT products, all components free of equal rank."""
    ring = code.ring
    if isinstance(ring, ProductRing):
        comps = [code.project(j) for j in range(len(ring.components))]
        ranks = [rk_r(c) for c in comps]
        return all(is_free(c) for c in comps) and len(set(ranks)) == 1
    return code.size == ring.size ** rk_r(code)


def is_modular_independent(ring: Ring, vectors, bound: int | None = None) -> bool:
    """No vanishing combination carries a unit coefficient.

    A unit coefficient can be normalized to 1, so it suffices to sweep, for
    each position i, all coefficient tuples on the remaining positions.
    """
    if not ring.is_local:
        raise NotLocal(f"{ring} is not local")
    vectors = [tuple(v) for v in vectors]
    s = len(vectors)
    if s == 0:
        return True
    space = s * ring.size ** (s - 1)
    limit = bound if bound is not None else DEFAULT_COEFF_BOUND
    if space > limit:
        raise ClosureTooLarge(space, limit)
    for i, vi in enumerate(vectors):
        others = vectors[:i] + vectors[i + 1 :]
        for coeffs in itertools.product(ring.elements(), repeat=s - 1):
            acc = vi
            for a, v in zip(coeffs, others):
                if a != 0:
                    acc = vec_add(ring, acc, vec_scale(ring, a, v))
            if is_zero_vec(acc):
                return False
    return True


def is_r_independent(ring: Ring, vectors, bound: int | None = None) -> bool:
    """Every vanishing combination must zero out at least one of its terms."""
    if not ring.is_local:
        raise NotLocal(f"{ring} is not local")
    vectors = [tuple(v) for v in vectors]
    s = len(vectors)
    if s == 0:
        return True
    space = ring.size**s
    limit = bound if bound is not None else DEFAULT_COEFF_BOUND
    if space > limit:
        raise ClosureTooLarge(space, limit)
    for coeffs in itertools.product(ring.elements(), repeat=s):
        terms = [vec_scale(ring, a, v) for a, v in zip(coeffs, vectors)]
        total = tuple([ring.zero] * len(vectors[0]))
        for u in terms:
            total = vec_add(ring, total, u)
        if is_zero_vec(total) and not any(is_zero_vec(u) for u in terms):
            return False
    return True


def all_submodules(ring: Ring, n: int, bound: int | None = None) -> list[Code]:
    """Every submodule of R^n, by closure-saturated breadth-first growth."""
    zero = Code.zero(ring, n)
    seen = {zero.key_bytes(): zero}
    frontier = [zero]
    all_vectors = list(itertools.product(range(ring.size), repeat=n))
    while frontier:
        nxt = []
        for code in frontier:
            base_rows = list(code.generator_matrix().rows)
            for v in all_vectors:
                if code.contains(v):
                    continue
                bigger = Code(ring, n, base_rows + [v], bound=bound)
                kb = bigger.key_bytes()
                if kb not in seen:
                    seen[kb] = bigger
                    nxt.append(bigger)
        frontier = nxt
    return sorted(seen.values(), key=lambda c: (c.size, c.key_bytes()))


def random_code(rng, ring: Ring, n: int, max_rows: int | None = None) -> Code:
    """Uniformly random generator rows; deterministic given the rng state."""
    rows_n = rng.randrange(0, (max_rows if max_rows is not None else n + 1) + 1)
    rows = [
        tuple(rng.randrange(ring.size) for _ in range(n)) for _ in range(rows_n)
    ]
    return Code(ring, n, rows)

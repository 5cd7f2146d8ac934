"""Exact algebra for linear codes over finite commutative rings.

Library layout:

* :mod:`ringcodes.rings` -- ring families and element arithmetic
* :mod:`ringcodes.linalg` -- vectors, matrices, codes, duals, intersections
* :mod:`ringcodes.pairs` -- intersection-pair analysis and the rank identities
* :mod:`ringcodes.polys` -- polynomials over chain rings, factorization, lifting
* :mod:`ringcodes.constacyclic` -- constacyclic codes, towers, duals
* :mod:`ringcodes.gray` -- the Gray isometry for F_q[gamma] and weights
* :mod:`ringcodes.eaqec` -- entanglement-assisted quantum code parameters
* :mod:`ringcodes.census` -- sweep reports (delimited output plus figures)
* :mod:`ringcodes.verify` -- runnable verification suites
* :mod:`ringcodes.cli` -- command line front end
"""

from .rings import (
    Ring,
    RingElement,
    ring,
    prime_field,
    integer_chain,
    gamma_chain,
    u_ring,
    crt_product,
    loewy_invariants,
)
from .linalg import Code, Matrix, span_closure

__version__ = "0.1.0"

__all__ = [
    "Ring",
    "RingElement",
    "ring",
    "prime_field",
    "integer_chain",
    "gamma_chain",
    "u_ring",
    "crt_product",
    "loewy_invariants",
    "Code",
    "Matrix",
    "span_closure",
    "__version__",
]

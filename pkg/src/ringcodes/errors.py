"""Exception types raised across the package.

Every error that a caller may reasonably want to catch has its own class;
they all derive from :class:`RingCodesError` so blanket handling stays easy.
"""


class RingCodesError(Exception):
    """Base class for all package errors."""


# ---- ring construction / element arithmetic ----

class NonPrimeModulus(RingCodesError):
    """A residue characteristic that must be prime is not."""


class UnsupportedFamily(RingCodesError):
    """Ring specification names a family outside the supported five."""


class RingMismatch(RingCodesError):
    """Operands belong to different rings."""


class NotAUnit(RingCodesError):
    """Inversion requested for a non-unit."""


class NotLocal(RingCodesError):
    """Operation requires a local ring but got a product."""


class NotAChainRing(RingCodesError):
    """Operation requires a principal maximal ideal (chain ring)."""


class ComponentMismatch(RingCodesError):
    """CRT parts do not match the product's component rings."""


# ---- module linear algebra ----

class ClosureTooLarge(RingCodesError):
    """An enumeration would exceed the configured oracle bound."""

    def __init__(self, needed, bound):
        super().__init__(f"enumeration needs {needed} elements, bound is {bound}")
        self.needed = needed
        self.bound = bound


class NotAPowerOfQ(RingCodesError):
    """Internal consistency failure: |C| is not a power of the residue size."""


class LengthMismatch(RingCodesError):
    """Codes or matrices over the same ring have incompatible lengths."""


class NotAParityCheck(RingCodesError):
    """Claimed parity-check matrix fails H G^T = 0 or the size duality."""


class PreconditionFailed(RingCodesError):
    """A theorem-level precondition does not hold for the given inputs."""


class VerificationFailed(RingCodesError):
    """An asserted identity failed; the message names the identity."""


# ---- polynomials / constacyclic codes ----

class NonUnitLeadingCoefficient(RingCodesError):
    """Polynomial division requires a divisor with unit leading coefficient."""


class NonUnitConstantTerm(RingCodesError):
    """Reciprocal requires a unit constant term."""


class NotCoprimeLength(RingCodesError):
    """Constacyclic machinery requires gcd(n, q) = 1."""


class NotADivisor(RingCodesError):
    """Polynomial is not a monic divisor of x^n - lambda."""


class BrokenChain(RingCodesError):
    """Divisor tower violates the divisibility chain D_{j+1} | D_j."""


class CanonicalizationMismatch(RingCodesError):
    """Canonical tuple assertions failed; flags a hypothesis violation."""


class MismatchedConstacyclicity(RingCodesError):
    """Towers with different lambda passed to a same-lambda operation."""


class SameResidueLambda(RingCodesError):
    """Mixed-lambda analysis requires distinct residues of the two units."""


# ---- Gray map / EAQEC ----

class NoSquareRootOfMinusOne(RingCodesError):
    """Field has no alpha with alpha^2 = -1 (q not 1 mod 4)."""


class UnsupportedRing(RingCodesError):
    """Gray machinery only applies to F_q[gamma] with gamma^2 = 0."""


class ZeroCode(RingCodesError):
    """Minimum weight of the zero code is undefined."""


class NegativeParameter(RingCodesError):
    """EAQEC parameter substitution produced a negative K or c."""


# ---- CLI ----

class UsageError(RingCodesError):
    """Bad command line; maps to exit code 2."""

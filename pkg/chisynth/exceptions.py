from typing import TYPE_CHECKING, Any

from nxtools import logging

if TYPE_CHECKING:
    from chisynth.matrices.ring import RingMatrix


class ChisynthException(Exception):
    """Base class for all chisynth exceptions."""

    detail: str = "Error"
    exit_code: int = 1

    def __init__(
        self,
        detail: str | None = None,
        log: bool | str = False,
    ) -> None:

        if detail is not None:
            self.detail = detail

        if log is True:
            logging.error(f"EXCEPTION: {self.exit_code} {self.detail}")
        elif type(log) is str:
            logging.error(f"EXCEPTION: {self.exit_code} {log}")

        super().__init__(self.detail)


#
# Arithmetic
#


class DivisionByZeroException(ChisynthException, ZeroDivisionError):
    """Raised when dividing by the zero element of Q(w)."""

    detail: str = "Division by zero"


class NegativeValuationException(ChisynthException):
    """Raised when a residue or digit expansion is requested for v_pi(x) < 0."""

    detail: str = "Element has negative valuation"


#
# Forms over F3
#


class NotSymmetricException(ChisynthException):
    detail: str = "Matrix is not symmetric"


class SingularException(ChisynthException):
    """Raised when an operation needs an invertible matrix."""

    detail: str = "Matrix is singular"


class BadShapeException(ChisynthException):
    """Raised when an antisymmetric form does not have the expected shape.

    That is: zero diagonal, first row (0, a, b) with (a, b) != (0, 0)
    and a vanishing lower-right block.
    """

    detail: str = "Form does not have the expected shape"


class DegenerateFormException(ChisynthException):
    detail: str = "Form is degenerate on the subspace"


#
# Matrices, lattices and the building
#


class NotInAException(ChisynthException):
    """Raised when g*g is not invertible over the valuation ring."""

    detail: str = "Matrix is not in the set A"


class NotUnitaryException(ChisynthException):
    detail: str = "Matrix is not unitary"
    exit_code: int = 2


class NotInRingException(ChisynthException):
    """Raised when an entry is not of the form z/chi^k with z in Z[w]."""

    detail: str = "Matrix entry is not in Z[1/chi]"
    exit_code: int = 2


class CoverageIncompleteException(ChisynthException):
    """Raised when the monomial word search misses monomials at every bound."""

    detail: str = "Monomial word table is incomplete"


class NotSelfDualException(ChisynthException):
    detail: str = "Lattice is not self-dual"


class NotPiEquivalentToDualException(ChisynthException):
    detail: str = "Dual lattice is not a chi-power multiple of the lattice"


class OddExponentException(ChisynthException):
    detail: str = "Lattice is chi-equivalent to its dual with an odd exponent"


class NotAlternatingException(ChisynthException):
    detail: str = "Lattice does not represent an alternating vertex"


class SameVertexException(ChisynthException):
    detail: str = "Both matrices describe the same vertex"


class BuildingInvariantException(ChisynthException):
    """Raised when a constructed lattice breaks its defining inclusion chain."""

    detail: str = "Building invariant violated"


class BoundExceededException(ChisynthException):
    detail: str = "Exploration bound exceeded"
    exit_code: int = 5


#
# Synthesis and CLI
#


class DescentStuckException(ChisynthException):
    """Raised when no candidate lowers l during synthesis.

    The offending matrix is kept on the exception for diagnosis.
    """

    detail: str = "Descent is stuck"
    exit_code: int = 4

    def __init__(
        self,
        matrix: "RingMatrix | None" = None,
        detail: str | None = None,
        log: bool | str = False,
    ) -> None:
        self.matrix = matrix
        super().__init__(detail, log)


class SynthesisVerificationException(ChisynthException):
    detail: str = "Synthesized word does not evaluate to the input"


class DocumentParseException(ChisynthException):
    detail: str = "Unable to parse document"
    exit_code: int = 3


class SelfTestFailedException(ChisynthException):
    detail: str = "Self-test found an internal inconsistency"
    exit_code: int = 6

    def __init__(
        self,
        failures: list[Any] | None = None,
        detail: str | None = None,
        log: bool | str = False,
    ) -> None:
        self.failures = failures or []
        super().__init__(detail, log)

"""Exception types shared across the package.

Three broad families:

* ``InputError`` — the caller handed us something malformed (CLI exit 1).
* ``PropertyFailure`` — a property/oracle suite found a violation (CLI exit 2).
* ``InternalAssertion`` — arithmetic contradicted a statement that is
  provably true; this always means an implementation bug (CLI exit 3).
"""


class SUnitDynError(Exception):
    """Base class for all package errors."""


class InputError(SUnitDynError):
    """Malformed or out-of-contract input."""


# -- number field construction ---------------------------------------------

class NotMonicError(InputError):
    pass


class NotSquarefreeError(InputError):
    pass


class DetectedReducibleError(InputError):
    """A nontrivial factorization of the defining polynomial was found."""


class IndexDivisorError(InputError):
    """Prime divides disc(f) and no monogenicity assertion was supplied."""


# -- element arithmetic -----------------------------------------------------

class ZeroElementError(InputError):
    """Operation undefined at zero (valuation, support, inverse)."""


class DivisionByZeroError(ZeroElementError):
    pass


# -- places / unit groups ---------------------------------------------------

class MissingUnitDataError(InputError):
    """Operation needs unit-group generators that were not supplied."""


class NotSUnitError(InputError):
    pass


class RootExtractionFailedError(SUnitDynError):
    """Exact p-th root extraction failed (tier limitation, never silent)."""


# -- rational maps ----------------------------------------------------------

class ZeroDenominatorError(InputError):
    pass


class ConstantMapError(InputError):
    """Dynamical operation requested on a constant map."""


class CoefficientBlowupError(SUnitDynError):
    """Symbolic iteration exceeded the per-coefficient size guard."""


class NotTotallyRamifiedShapeError(InputError):
    """Map does not have exactly one zero point and one pole point."""


class IrrationalBranchPointsError(InputError):
    """Zero/pole of a two-point map is not rational over the base field."""


# -- reductions -------------------------------------------------------------

class RootsNotDistinctError(InputError):
    pass


class RootsNotInFieldError(InputError):
    pass


class NotMonicOverOSError(InputError):
    pass


class PrimeTooSmallError(InputError):
    pass


class NotSUnitValueError(InputError):
    pass


class ShapeMismatchError(InputError):
    pass


# -- escape certificates ----------------------------------------------------

class HypothesisFailedError(InputError):
    """A certificate hypothesis does not hold; carries the failed clause."""

    def __init__(self, clause, witness=None):
        self.clause = clause
        self.witness = witness
        msg = clause if witness is None else f"{clause}: {witness}"
        super().__init__(msg)


# -- harness ----------------------------------------------------------------

class DuplicateNodesError(InputError):
    pass


class ConfigError(InputError):
    pass


class PropertyFailure(SUnitDynError):
    """A property suite reported at least one violation."""


class InternalAssertion(SUnitDynError):
    """Exact arithmetic contradicted a proved statement: implementation bug."""


class TrajectoryMismatchError(InternalAssertion):
    """Observed valuation trajectory differs from the certified growth law."""

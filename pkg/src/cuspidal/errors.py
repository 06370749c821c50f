"""Exception taxonomy shared by all modules.

Errors are grouped by the kind of precondition they report: field-level
guards (characteristic, parity), geometric preconditions (points on
curves/lines, vertex support), and construction failures (retry budgets).
The CLI maps these groups onto its exit-code contract.
"""


class WorkbenchError(Exception):
    """Base class for all errors raised by this package."""


# -- field / arithmetic guards -------------------------------------------

class FieldError(WorkbenchError):
    """Field-level precondition violated."""


class SmallCharacteristic(FieldError):
    """Positive characteristic too small for a separability-sensitive step."""


class EvenCharacteristic(FieldError):
    """Characteristic 2 is not supported for this operation."""


class NotASquare(FieldError):
    """A supplied branch value does not square to the required value."""


class BranchZero(FieldError):
    """Square-root branch seeded at zero (ramification point)."""


# -- polynomial / form preconditions -------------------------------------

class ZeroForm(WorkbenchError):
    """Operation undefined on the identically-zero form."""


class BothZero(WorkbenchError):
    """Resultant of two zero polynomials is undefined."""


class NotCoprime(WorkbenchError):
    """Parametrization components share a common factor."""


class DegreeNegative(WorkbenchError):
    """A degree bound below the allowed range was requested."""


# -- geometry preconditions ----------------------------------------------

class GeometryError(WorkbenchError):
    """Geometric precondition violated."""


class PointNotOnLine(GeometryError):
    """Support point does not lie on the named ruling."""


class PointNotOnCurve(GeometryError):
    """The given point does not lie on the curve."""


class CenterOnCurve(GeometryError):
    """Projection center lies on the curve."""


class CenterIsVertex(GeometryError):
    """Projection center or support is the cone vertex."""


class VertexSupport(GeometryError):
    """The cone vertex is not allowed as scheme support."""


class ZeroTangent(GeometryError):
    """Tangent direction must be nonzero."""


class SingularPoint(GeometryError):
    """Operation requires a smooth point of the curve."""


class DegenerateBidegree(GeometryError):
    """Bidegree (1,1) is excluded from inner-projection criteria."""


class NonEffective(GeometryError):
    """Divisor must be effective."""


class ZeroSpace(GeometryError):
    """Operation requires a nonzero section space."""


class SpecialP(GeometryError):
    """Chosen point fails the non-speciality requirement."""


class CoincidentQ(GeometryError):
    """Projection center degenerates onto the image curve."""


class EmptySystem(WorkbenchError):
    """Linear system has no nonzero members."""


class DTooSmall(WorkbenchError):
    """Formula argument below its domain of validity."""


# -- construction control ------------------------------------------------

class RetriesExhausted(WorkbenchError):
    """No member passing all certificates was found within the retry budget."""

    def __init__(self, message, draws=None):
        super().__init__(message)
        self.draws = draws or []


class GuaranteeOutOfRange(Warning):
    """Inputs below the guaranteed thresholds; results are experimental."""


class ParseError(WorkbenchError):
    """Malformed polynomial, point, scheme, or field description."""

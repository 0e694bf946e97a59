"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for every domain error raised by algkit."""


class ParseError(AlgebraError, ValueError):
    """A scalar string, algebra document, or family document is malformed."""


class BothZero(AlgebraError, ValueError):
    """gcd(0, 0) requested."""


class LimitDiverges(AlgebraError):
    """A t->0 limit has a pole.

    ``at`` carries the offending (i, j, k) when the divergence happened
    inside a structure tensor, else None.
    """

    def __init__(self, message, at=None):
        super().__init__(message)
        self.at = at


class SingularMatrix(AlgebraError):
    """A matrix that must be invertible is singular over its field."""


class DimensionMismatch(AlgebraError, ValueError):
    """Operands have incompatible dimensions."""


class FieldMismatch(AlgebraError, ValueError):
    """Operands live over different scalar fields (Q vs Q(t))."""


class HypothesisViolated(AlgebraError):
    """The two-scaling degeneration was invoked on an excluded coefficient tuple.

    ``tuple4`` carries the offending (g_ii, g_ij, g_ji, g_jj).
    """

    def __init__(self, message, tuple4=None):
        super().__init__(message)
        self.tuple4 = tuple4


class CatalogError(AlgebraError, ValueError):
    """Base class for catalog construction errors."""


class UnknownName(CatalogError):
    pass


class DimTooSmall(CatalogError):
    pass


class MissingParam(CatalogError):
    pass


class ForbiddenParam(CatalogError):
    pass

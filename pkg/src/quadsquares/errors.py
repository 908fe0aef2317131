"""Exception hierarchy shared by all modules."""


class GeometryError(ValueError):
    """Base class for domain errors raised by quadsquares."""


class NoUniqueFixedPoint(GeometryError):
    """Raised when a direct isometry is a translation or the identity.

    ``kind`` is ``"translation"`` (no fixed point) or ``"identity"``
    (every point is fixed).
    """

    def __init__(self, kind, message=None):
        self.kind = kind
        super().__init__(message or f"no unique fixed point: map is a {kind}")


class DegenerateQuadrilateral(GeometryError):
    pass


class DegeneratePolygon(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class InvalidOffsets(GeometryError):
    pass


class PivotUndefined(GeometryError):
    pass


class NotAParallelogram(GeometryError):
    def __init__(self, residual, tolerance):
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"closure residual {residual:.3e} exceeds tolerance {tolerance:.3e}"
        )


class NotAdmissibleTuple(GeometryError):
    pass


class DegenerateIntermediate(GeometryError):
    pass


class InsufficientPoints(GeometryError):
    pass


class SamplingExhausted(GeometryError):
    pass


class ParseError(ValueError):
    """Malformed input document; carries 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class ValidationError(ValueError):
    pass

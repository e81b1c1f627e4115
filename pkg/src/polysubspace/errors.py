"""Exception types shared across the package."""


class PolySubspaceError(Exception):
    """Base class for all errors raised by this package."""


class IncompatibleTower(PolySubspaceError):
    """Two elements use different square-free radicals."""


class ParseError(PolySubspaceError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        elif column is not None:
            where = f" (column {column})"
        super().__init__(message + where)


class ZeroSubspace(PolySubspaceError):
    """All supplied polynomials were zero."""


class BoundsMismatch(PolySubspaceError):
    pass


class DimensionMismatch(PolySubspaceError):
    pass


class DimensionDrop(PolySubspaceError):
    """A derived subspace lost dimension where the caller needed it intact."""


class TowerLimited(PolySubspaceError):
    """The requested roots or maps lie outside the representable field tower."""


class TowerTooSmall(TowerLimited):
    pass


class InternalInconsistency(PolySubspaceError):
    """Two independent computations of the same quantity disagree."""


class GroupClosureFailure(PolySubspaceError):
    pass


class NotFiniteStab(PolySubspaceError):
    """The operation needs a Wronskian with finite symmetry group."""

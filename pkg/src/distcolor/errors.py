"""Exception hierarchy shared across the package."""


class DistcolorError(Exception):
    """Base class for every error raised by this package."""


class DimacsError(DistcolorError):
    """A DIMACS graph or coloring file could not be parsed."""


class PreconditionError(DistcolorError):
    """Input violates a documented precondition (caller error)."""


class TreeConstraintError(PreconditionError):
    """A search-tree ordering directive is infeasible or conflicting."""


class PropernessError(PreconditionError):
    """A coloring (or a forced color) puts the same color on both ends of an edge,
    or a total/proper coloring was required and not supplied."""


class PaletteExhaustedError(DistcolorError):
    """Greedy coloring ran out of admissible colors for some vertex."""


class SearchBoundError(PreconditionError):
    """Graph exceeds the configured size bound of an exhaustive search."""


class InternalConsistencyError(DistcolorError):
    """A step the underlying theory guarantees has failed; indicates a bug upstream."""

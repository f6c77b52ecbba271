"""Exception hierarchy shared by all modules."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class NotConvex(GeometryError):
    """Input polygon has a reflex vertex after canonical ordering."""


class Degenerate(GeometryError):
    """Fewer than 3 usable vertices remain (or all points collinear)."""


class NotInterior(GeometryError):
    """A point required to be strictly inside the domain is not."""


class CoincidentPoints(GeometryError):
    """Two points expected to be distinct coincide within tolerance."""


class EmptyRegion(GeometryError):
    """An operation needing a nonempty region received an empty one."""


class Unreachable(GeometryError):
    """No interior point at the requested distance exists along the ray."""


class EmptyInstance(GeometryError):
    """A solver was invoked on an instance with no points."""


class NoFeasibleBasis(GeometryError):
    """Basis search found no candidate covering all points (tolerance bug)."""

"""Exception taxonomy shared across the package."""


class TvpmError(Exception):
    """Base class for every package-specific error."""


class ParseError(TvpmError):
    """Malformed or invalid input: configuration text, certificate text, bad mode."""


class SeparationInfeasible(TvpmError):
    """The marked face's hull meets the complementary hull, so no strictly
    separating hyperplane exists."""


class MuTooLarge(TvpmError):
    """The marked face has more than r - 1 vertices."""


class DegenerateLift(TvpmError):
    """A point lies exactly on the separating hyperplane; its projective image
    is undefined."""


class InternalError(TvpmError):
    """An exact-arithmetic self-check failed.  This signals a bug in the
    solver, never a problem with the input."""

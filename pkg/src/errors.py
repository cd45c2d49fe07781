"""Exception hierarchy shared by every mahlerrev module."""


class MahlerError(Exception):
    """Base class for all library failures."""


class DegeneratePolygon(MahlerError, ValueError):
    """Chain hull has empty interior or the origin is not interior."""


class ZeroProfile(MahlerError, ValueError):
    """Generating function vanishes at an interior point."""


class InvalidInterval(MahlerError, ValueError):
    pass


class AnalyticUnsupported(MahlerError, TypeError):
    """Operation needs a piecewise-linear generator."""


class NoInteriorBracket(MahlerError, ValueError):
    """No axis shift keeps the origin strictly inside the body."""


class OutOfRegion(MahlerError, ValueError):
    """Lemma parameters fall outside their feasibility region."""


class OutsideTriangle(OutOfRegion):
    pass


class NotReducible(MahlerError, ValueError):
    """Chain does not have the shape a reduction step needs."""


class NonTerminating(MahlerError, RuntimeError):
    """Reduction exceeded its step budget."""


class InputFormatError(MahlerError, ValueError):
    """Input file failed to parse or validate."""


class SweepIoError(MahlerError, OSError):
    """Sweep output could not be written."""

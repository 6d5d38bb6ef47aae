"""Exception hierarchy shared by all modules."""


class SuperfrontError(Exception):
    """Base class for every error raised by the package."""


class DegenerateFrame(SuperfrontError):
    """Phase front co-moves with the boundary frame; the boosted index diverges."""


class DegenerateGeometry(SuperfrontError):
    """An auxiliary denominator (h_t or h_r) vanishes."""


class ResonantDivergence(SuperfrontError):
    """Squeezing coefficients diverge at or beyond a resonance.

    ``between_resonances`` is set when the mixing-ratio radicand is negative,
    i.e. the two G factors have opposite signs.
    """

    def __init__(self, message: str, between_resonances: bool = False):
        super().__init__(message)
        self.between_resonances = between_resonances


class RootBracketingFailure(SuperfrontError):
    """A resonance branch is active but no sign change was found on the scan grid."""


class ConfigError(SuperfrontError, ValueError):
    def __init__(self, field: str, reason: str):
        super().__init__(f"{field}: {reason}")
        self.field = field
        self.reason = reason


class IoError(SuperfrontError, OSError):
    """Failure writing a result file."""

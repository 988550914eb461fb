"""Typed errors raised by the slideocam toolkit.

Every failure mode that a caller can act on gets its own class; plain
ValueError is reserved for programming mistakes (bad argument types,
missing material, malformed sample lists).
"""


class SlideocamError(Exception):
    """Base class for all toolkit errors."""


class DegenerateEta(SlideocamError):
    """eta is (numerically) 1/(2*pi): the profile coefficients are singular."""


class NoRootFound(SlideocamError):
    """v_c has no sign change on [-pi, 0): the profile cannot be closed."""


class SingularOrientation(SlideocamError):
    """Cam angle psi = pi: pressure angle reaches 90 degrees and the
    transmitted force is unbounded; a conjugate cam must carry the load."""


class Undercut(SlideocamError):
    """Roller radius equals the pitch-curve radius of curvature: the cam
    profile has a cusp at this orientation."""


class DegenerateCurve(SlideocamError):
    """Sampled curve has a (numerically) stationary point; curvature via
    finite differences is undefined there."""


class Infeasible(SlideocamError):
    """Synthesis search space exhausted without a passing design.

    Carries the full iteration trace so the caller can see every
    (pitch, cam count) combination that was tried and why it failed.
    """

    def __init__(self, trace):
        super().__init__("synthesis exhausted the search space without a feasible design")
        self.trace = trace

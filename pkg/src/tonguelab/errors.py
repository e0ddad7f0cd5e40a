"""Error taxonomy shared by all modules.

Every failure that reflects a numerical or domain condition (rather than a
programming mistake) derives from TongueLabError so callers, and the CLI in
particular, can map the whole family to one exit path.
"""


class TongueLabError(Exception):
    """Base class for all toolkit errors."""


class ParameterOutOfRange(TongueLabError):
    """A parameter left the open interval on which the family is a homeomorphism."""


class NonCoprime(TongueLabError):
    """A rational label p/q was not in lowest terms."""


class BracketFailure(TongueLabError):
    """Bisection bracket endpoints did not straddle zero."""

    def __init__(self, message, a=None):
        super().__init__(message)
        self.a = a


class DegenerateWitness(TongueLabError):
    """Second derivative at the boundary extremum is numerically zero."""


class InsufficientData(TongueLabError):
    """Too few usable samples for a fit."""


class UnderflowedWidths(TongueLabError):
    """Tongue widths at or below solver tolerance; the a-ladder is too small."""


class StepUnderflow(TongueLabError):
    """Finite-difference stencil collapsed to an unusable step."""


class OrderMismatch(TongueLabError):
    """Series operands have incompatible truncation orders."""


class NonvanishingConstantTerm(TongueLabError):
    """Inner series of a composition does not fix the origin."""


class NotRootOfUnity(TongueLabError):
    """Series multiplier is not a q-th root of unity."""


class IdentityToTruncation(TongueLabError):
    """The q-th iterate equals the identity up to the truncation order."""


class NonresonantLeadingTerm(TongueLabError):
    """First nonzero iterate coefficient sits at an index not congruent to 1 mod q."""


class MultiplicityNotOne(TongueLabError):
    """Width law requested for a germ with parabolic multiplicity above one."""

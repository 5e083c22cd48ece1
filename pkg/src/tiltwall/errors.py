"""Exception types raised by tiltwall.

Every error carries a short machine-readable ``code`` which the command line
front end reports as ``{"error": code, "detail": ...}``.
"""


class TiltwallError(ValueError):
    """Base class for precondition failures."""

    code = "error"

    def __init__(self, detail=""):
        super().__init__(detail or self.code)
        self.detail = detail or self.code


class InvalidAmpleClass(TiltwallError):
    code = "invalid-ample-class"


class InvalidDivisor(TiltwallError):
    code = "invalid-divisor"


class InvalidABParameters(TiltwallError):
    code = "invalid-ab-parameters"


class NuNotZero(TiltwallError):
    code = "nu-not-zero"


class ZeroRank(TiltwallError):
    code = "zero-rank"


class DegenerateCharge(TiltwallError):
    code = "degenerate-charge"


class PhaseGapViolation(TiltwallError):
    code = "phase-gap-violation"


class NonPositiveT(TiltwallError):
    code = "nonpositive-t"


class IdenticallySatisfied(TiltwallError):
    code = "identically-satisfied"


class DegenerateConic(TiltwallError):
    code = "degenerate-conic"


class Ch1SignChange(TiltwallError):
    code = "ch1-sign-change"


class EmptyWindow(TiltwallError):
    code = "empty-window"


class BoundViolated(TiltwallError):
    code = "bound-violated"


class HypothesisViolated(TiltwallError):
    code = "hypothesis-violated"


class ScenarioInvariant(TiltwallError):
    code = "scenario-invariant"


class UnsupportedModel(TiltwallError):
    code = "unsupported-model"


class ParseError(TiltwallError):
    """Malformed input on the wire (rationals, JSON objects, flags)."""

    code = "parse-error"

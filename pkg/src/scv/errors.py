"""Exception types shared across the toolkit."""


class ScvError(Exception):
    """Base class for all toolkit errors."""


class NonUnit(ScvError):
    """Inversion of a residue divisible by p."""


class NotPAdicInteger(ScvError):
    """A rational with p in its denominator where a p-adic integer is required."""


class CapacityExceeded(ScvError):
    """A table or enumeration would exceed its configured size limit."""


class PrecisionTooLow(ScvError):
    """The available working precision cannot support the requested operation."""


class BadRange(ScvError):
    """An index argument lies outside its permitted range."""


class BadPrime(ScvError):
    """The prime violates a congruence-class hypothesis of the operation."""


class PiResidueNonScalar(ScvError):
    """A pi-adic value expected to collapse to a scalar did not; arithmetic bug."""


class FractionalLeadingPower(ScvError):
    """An eta-quotient whose leading q-power is not a nonnegative integer."""


class PoleSample(ScvError):
    """A sample point hit a pole of the rational function under test."""


class HypothesisViolated(ScvError):
    """Arguments violate the stated hypothesis of an identity."""


class UnknownCase(ScvError):
    """No registered verification case has the requested name."""


class NoConsistentTwist(ScvError):
    """No candidate twist matches every calibration prime."""


class AmbiguousTwist(ScvError):
    """Two inequivalent twists survive calibration."""


class IoFailure(ScvError):
    """A report or cache could not be written or read."""

"""Exception hierarchy.

Everything raised deliberately by the library derives from
:class:`CharSlopeError`, which is itself a ``ValueError`` so callers that
only care about bad input can catch the builtin.
"""


class CharSlopeError(ValueError):
    """Base class for all library errors."""


# slopes
class ZeroZero(CharSlopeError):
    pass


class InfiniteSlope(CharSlopeError):
    pass


class InvalidCable(CharSlopeError):
    pass


class SlopeParseError(CharSlopeError):
    pass


# geodesic / volume bounds
class NonPositiveSystole(CharSlopeError):
    pass


class HypothesisNotMet(CharSlopeError):
    pass


class DenominatorNonPositive(CharSlopeError):
    pass


class BelowElevenError(CharSlopeError):
    pass


class VolumeTooSmall(CharSlopeError):
    pass


# census
class MalformedRecord(CharSlopeError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DuplicateName(CharSlopeError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"duplicate census name {name!r}")


class InconsistentRecord(CharSlopeError):
    """Fixture data contradicts a logical consequence of its own claims."""


# surgery classification
class InvalidParams(CharSlopeError):
    pass


class InvalidTorusParams(InvalidParams):
    pass


class InvalidCableParams(InvalidParams):
    pass


class InvalidClasp(InvalidParams):
    pass


class ZeroParameter(InvalidParams):
    pass


# characterisation
class NonHyperbolicInput(CharSlopeError):
    pass


class MissingSystole(CharSlopeError):
    pass


class InvalidStage(CharSlopeError):
    pass

"""Exception hierarchy.

Every error raised by the library derives from :class:`KreinError`, so
callers (and the CLI) can catch the whole family at once.
"""


class KreinError(Exception):
    """Base class for all library errors."""


# numerics
class NotHermitian(KreinError):
    pass


class NoConvergence(KreinError):
    pass


class DegenerateEquation(KreinError):
    pass


# space
class DimensionMismatch(KreinError):
    pass


class Degenerate(KreinError):
    pass


class NotIndefinite(KreinError):
    pass


class ZeroVector(KreinError):
    pass


# decomposition
class WrongRank(KreinError):
    pass


class NotUniformlyPositive(KreinError):
    pass


class CompanionNotNegative(KreinError):
    pass


class NotOrthogonal(KreinError):
    pass


class NeutralAxis(KreinError):
    pass


class AxiomViolation(KreinError):
    pass


class NegativeRadicand(KreinError):
    pass


# prescribe
class TargetBelowRange(KreinError):
    pass


class NeedsBothSigns(NotIndefinite):
    pass


class InsufficientDimension(KreinError):
    pass


class NoRootInUnitInterval(KreinError):
    pass


class NotNeutral(KreinError):
    pass


class DegeneratePairing(KreinError):
    pass


class EmptyGap(KreinError):
    pass


class HypothesisViolated(KreinError):
    pass


# sequences
class DimensionCondition(KreinError):
    pass


class LinearlyDependent(KreinError):
    pass


class Orthogonal(KreinError):
    pass


# catalog
class ParamOutOfRange(KreinError):
    pass


# serialize
class MalformedInput(KreinError):
    pass

"""Exception hierarchy shared by every module of the package."""


class SteinerTSPError(Exception):
    """Base class for all errors raised by steiner_tsp."""


class InvariantViolation(SteinerTSPError, AssertionError):
    """A checked mathematical guarantee failed. Always a bug."""


# graph construction / parsing
class GraphInputError(SteinerTSPError, ValueError):
    pass


class IndexOutOfRange(GraphInputError):
    pass


class SelfLoop(GraphInputError):
    pass


class ParseError(GraphInputError):
    pass


class BadParameter(SteinerTSPError, ValueError):
    pass


# structural preconditions
class Disconnected(SteinerTSPError):
    pass


class NotBiconnected(SteinerTSPError):
    pass


class NotTwoConnectedBetween(SteinerTSPError):
    """Fewer than two internally disjoint paths join the requested pair."""


class PreconditionViolated(SteinerTSPError):
    pass


# search budgets
class SubsetTooLarge(SteinerTSPError):
    pass


class TooLarge(SteinerTSPError):
    pass


class BudgetExceeded(SteinerTSPError):
    pass


# steiner cycles
class SteinerCycleNotFound(SteinerTSPError):
    """No simple cycle through the required set was produced.

    ``proven_absent`` is True only when an exhaustive search finished and
    showed that no such cycle exists. Otherwise ``reason`` says which budget
    stopped the search.
    """

    def __init__(self, message, *, proven_absent=False, reason="budget"):
        super().__init__(message)
        self.proven_absent = proven_absent
        self.reason = reason


class AugmentationStuck(SteinerTSPError):
    pass


class SelectionFailed(SteinerTSPError):
    pass


# tours
class OddRequiredSet(SteinerTSPError, ValueError):
    pass


class RequiredNotOnCycle(SteinerTSPError, ValueError):
    pass


class RequiredSetNotCovered(SteinerTSPError, ValueError):
    pass


class GammaTooLarge(SteinerTSPError, ValueError):
    pass


class OddDegree(SteinerTSPError, ValueError):
    pass


class DisconnectedSupport(SteinerTSPError, ValueError):
    pass


class InvalidWalk(SteinerTSPError, ValueError):
    pass

"""Exception hierarchy shared by every module of the package."""


class ChordPackError(Exception):
    """Base class for all errors raised by :mod:`chordpack`."""


class MalformedGraph6(ChordPackError, ValueError):
    """The text is not a valid graph6 encoding."""


class InvalidOrder(ChordPackError, ValueError):
    """A constructor was asked for a graph of an impossible order."""


class CapacityExceeded(ChordPackError):
    """An exact-search routine was called on an instance above its cap."""


class EmptyQuerySet(ChordPackError, ValueError):
    pass


class Disconnected(ChordPackError, ValueError):
    pass


class InvalidSegment(ChordPackError, ValueError):
    """The vertex set given as a segment is not a path on the cycle."""


class PreconditionViolated(ChordPackError, ValueError):
    """An operation's documented precondition does not hold for the input."""


class PathTooShort(ChordPackError, ValueError):
    pass


class InvalidS(ChordPackError, ValueError):
    pass


class Infeasible(ChordPackError, ValueError):
    pass


class InvariantViolation(ChordPackError, AssertionError):
    """A structural guarantee failed to hold.

    Raised when a construction produces an invalid witness or when a
    property that must hold for the given input is observed to fail.  On
    valid input this always indicates a bug, or (inside the lemma suites)
    a genuine counterexample worth reporting.
    """

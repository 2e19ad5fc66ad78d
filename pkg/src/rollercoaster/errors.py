"""Exception hierarchy shared by every module.

Precondition failures derive from ``PreconditionError`` so the CLI can map
them to a single exit code.
"""


class RollercoasterError(Exception):
    pass


class PreconditionError(RollercoasterError, ValueError):
    pass


class InvalidIndices(PreconditionError):
    pass


class DuplicateValue(PreconditionError):
    pass


class TooShort(PreconditionError):
    pass


class TooLarge(PreconditionError):
    pass


class BadK(PreconditionError):
    pass


class NotAPermutation(PreconditionError):
    pass


class EmptyWindow(PreconditionError):
    pass


class IndexOutOfRange(PreconditionError, IndexError):
    pass


class AllEmpty(RollercoasterError, LookupError):
    pass


class TooFewPoints(PreconditionError):
    pass


class NotGeneralPosition(PreconditionError):
    pass


class BadCaterpillar(PreconditionError):
    pass


class WindowExhausted(RollercoasterError):
    """Raised by the two-chain split when no 3-descent appears before the input ends.

    ``split`` carries the partial chains so the caller can finish the sweep.
    """

    def __init__(self, split):
        super().__init__("no 3-descent in the remaining window")
        self.split = split

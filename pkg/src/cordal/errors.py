"""Exception hierarchy.

Every error carries the CLI exit code it maps to: 1 for bad input,
2 for a refusal to compute, 3 for a broken internal invariant.
"""


class CordalError(Exception):
    code = 3


class UsageError(CordalError):
    code = 1


class Refusal(CordalError):
    code = 2


class InvariantViolation(CordalError):
    code = 3


class NonUnit(UsageError, ValueError):
    pass


class BraidSyntaxError(UsageError, ValueError):
    pass


class BraidIndexError(UsageError, IndexError):
    pass


class StrandMismatch(InvariantViolation, ValueError):
    pass


class ContextMismatch(InvariantViolation, ValueError):
    pass


class NotConnectable(InvariantViolation, ValueError):
    pass


class MalformedImage(InvariantViolation):
    pass


class OracleMismatch(InvariantViolation):
    pass


class NoSolution(UsageError, ValueError):
    pass


class NotMonomial(Refusal):
    pass


class NotKnot(Refusal):
    pass


class Unstable(Refusal):
    pass


class SearchTooLarge(Refusal):
    pass

"""Exception hierarchy.

Errors fall in three families that the CLI maps to exit codes: bad input
(``UsageError``), an oracle enumeration that would exceed its budget
(``BudgetExceeded``), and ``InternalError`` for any failed consistency check,
which always indicates a bug rather than bad input.
"""


class SurfhomError(Exception):
    pass


class UsageError(SurfhomError, ValueError):
    pass


class InternalError(SurfhomError, AssertionError):
    pass


# group construction
class OrderCapExceeded(UsageError):
    pass


class InvalidPermutation(UsageError):
    pass


class GroupSpecError(UsageError):
    pass


# words
class WordSyntaxError(UsageError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownGenerator(UsageError):
    pass


class RankMismatch(UsageError):
    pass


# class functions and tables
class GroupMismatch(UsageError):
    pass


class GenericShape(UsageError):
    pass


class WeightMismatch(UsageError):
    pass


class NotSymmetricGroup(UsageError):
    pass


class PrimeSearchFailed(SurfhomError):
    pass


class BudgetExceeded(SurfhomError):
    pass


class LiftInconsistent(InternalError):
    pass


class NonIndicatorValue(InternalError):
    pass


class NonIntegerIndicator(InternalError):
    pass


class NonIntegerResult(InternalError):
    pass


class OracleMismatch(InternalError):
    pass

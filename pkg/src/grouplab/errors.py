"""Exception hierarchy for grouplab."""


class GroupLabError(Exception):
    """Base class for every error raised by this package."""


class ClosureExceeded(GroupLabError):
    pass


class NotBijective(GroupLabError, ValueError):
    pass


class NotNormal(GroupLabError, ValueError):
    pass


class NotAHomomorphism(GroupLabError, ValueError):
    pass


class AutCapExceeded(GroupLabError):
    pass


class BudgetExceeded(GroupLabError):
    pass


class NoSplittingPrime(GroupLabError):
    pass


class DegenerateEigenspace(GroupLabError):
    pass


class LiftAmbiguous(GroupLabError):
    pass


class LiftOutOfRange(GroupLabError):
    pass


class PreconditionViolated(GroupLabError, ValueError):
    pass


class ZeroResult(GroupLabError):
    pass


class FieldTooLarge(GroupLabError):
    pass


class NotPrimePower(GroupLabError, ValueError):
    pass


class ScanTooLarge(GroupLabError):
    pass


class SizeExceeded(GroupLabError):
    pass


class PermNotTrivial(GroupLabError, ValueError):
    pass


class ParseError(GroupLabError, ValueError):
    pass

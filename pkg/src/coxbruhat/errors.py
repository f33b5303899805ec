"""Exception hierarchy shared by every module."""


class CoxeterError(Exception):
    """Base class for all errors raised by coxbruhat."""


class InvalidMatrix(CoxeterError, ValueError):
    pass


class InfiniteOrTooLarge(CoxeterError):
    """Root closure or element enumeration exceeded its cap (or an infinite entry was given)."""


class IndexOutOfRange(CoxeterError, IndexError):
    pass


class SystemMismatch(CoxeterError, ValueError):
    pass


class OracleTooLarge(CoxeterError):
    pass


class DuplicateElements(CoxeterError, ValueError):
    pass


class InternalInconsistency(CoxeterError):
    pass


class NotMinimalRep(CoxeterError, ValueError):
    pass


class NotASubset(CoxeterError, ValueError):
    pass


class TheoremViolation(CoxeterError):
    """The two Bruhat verdicts on minimal and maximal representatives disagree."""


class DegreeMismatch(CoxeterError, ValueError):
    pass

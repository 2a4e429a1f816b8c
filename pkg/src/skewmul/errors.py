"""Exception hierarchy.

Every error carries a short ``code`` equal to its class name; the CLI prints
that code so scripts can match on it.
"""


class SkewMulError(ValueError):
    @property
    def code(self) -> str:
        return type(self).__name__


class ZeroInverse(SkewMulError, ZeroDivisionError):
    pass


class NotPrime(SkewMulError):
    pass


class NoRootOfUnity(SkewMulError):
    pass


class BadRootOrder(SkewMulError):
    pass


class DuplicateNodes(SkewMulError):
    pass


class NotCharR(SkewMulError):
    pass


class SmallField(SkewMulError):
    pass


class NoIrreducible(SkewMulError):
    pass


class AlgebraMismatch(SkewMulError):
    pass


class KindMismatch(SkewMulError):
    pass


class DegreeTooLarge(SkewMulError):
    pass


class SizeMismatch(SkewMulError):
    pass


class NotATower(SkewMulError):
    pass


class NoPrimitive(SkewMulError):
    pass

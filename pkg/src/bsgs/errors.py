"""Exception hierarchy shared by every module in the package."""


class BSGSError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeCharacteristic(BSGSError, ValueError):
    pass


class FieldTooLarge(BSGSError, ValueError):
    pass


class DivisionByZero(BSGSError, ZeroDivisionError):
    pass


class DimensionMismatch(BSGSError, ValueError):
    pass


class SingularMatrix(BSGSError, ValueError):
    pass


class IdentityMatrix(BSGSError, ValueError):
    pass


class ZeroVector(BSGSError, ValueError):
    pass


class DimensionTooLarge(BSGSError, ValueError):
    pass


class BadDimension(BSGSError, ValueError):
    pass


class OrbitLimitExceeded(BSGSError, RuntimeError):
    def __init__(self, limit):
        super().__init__(f"orbit exceeded {limit} points")
        self.limit = limit


class PointNotInOrbit(BSGSError, KeyError):
    pass


class IncompleteChain(BSGSError, RuntimeError):
    pass


class GroupTooLarge(BSGSError, RuntimeError):
    pass


class NotAMember(BSGSError, ValueError):
    pass


class GeneratorBlowup(BSGSError, RuntimeError):
    def __init__(self, limit):
        super().__init__(f"strong generating set grew beyond {limit} elements")
        self.limit = limit


class NoGenerators(BSGSError, ValueError):
    pass


class InvalidWord(BSGSError, ValueError):
    pass


class ParseError(BSGSError, ValueError):
    pass

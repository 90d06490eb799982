"""Exception hierarchy shared by all lcdmds modules."""


class CodingError(Exception):
    """Base class for every error raised by this package."""


# ---- finite field construction / arithmetic ----

class NotPrime(CodingError):
    pass


class NotOddCharacteristic(CodingError):
    pass


class OrderCapExceeded(CodingError):
    pass


class NoPrimitivePolynomial(CodingError):
    """Internal failure: no primitive modulus found for a valid (p, m)."""


class InvalidModulus(CodingError):
    """User-supplied modulus is not a monic primitive polynomial."""


class FieldMismatch(CodingError):
    pass


class DivisionByZero(CodingError, ZeroDivisionError):
    pass


class NotAQuadraticExtension(CodingError):
    pass


class NotASubfieldOrder(CodingError):
    pass


# ---- matrix algebra ----

class DimensionMismatch(CodingError):
    pass


class NotSquare(CodingError):
    pass


class RankDeficient(CodingError):
    pass


class BadIndexSet(CodingError):
    pass


# ---- budgets ----

class BudgetExceeded(CodingError):
    pass


class CombinationBudgetExceeded(BudgetExceeded):
    pass


# ---- constructions ----

class DuplicatePoint(CodingError):
    pass


class ZeroMultiplier(CodingError):
    pass


class ParamViolation(CodingError):
    pass


class DivisibilityViolation(CodingError):
    pass


class DistinctnessViolation(CodingError):
    pass


# ---- classification ----

class NotMds(CodingError):
    """Raised when a step that requires an MDS code detects a non-MDS one."""


class NotASubfieldTower(CodingError):
    pass

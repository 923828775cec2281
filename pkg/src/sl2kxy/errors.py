"""Exception hierarchy shared by all modules."""


class Sl2Error(Exception):
    """Base class for every error raised by sl2kxy."""


# arithmetic

class TowerDepthExceeded(Sl2Error, ArithmeticError):
    pass


class SqrtUnavailable(Sl2Error, ArithmeticError):
    """No square root exists inside any quadratic extension reachable from the tower."""


class DivisionByZeroPoly(Sl2Error, ZeroDivisionError):
    pass


class NotDivisible(Sl2Error, ArithmeticError):
    def __init__(self, dividend, divisor, remainder):
        super().__init__(f"{divisor} does not divide {dividend}")
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder


class BothZero(Sl2Error, ValueError):
    pass


# mathematical negatives

class NotUnimodular(Sl2Error):
    pass


class NotSL2(Sl2Error, ValueError):
    pass


# scope / preconditions

class PreconditionViolated(Sl2Error, ValueError):
    pass


class NotDegreeTwo(PreconditionViolated):
    pass


class NoLowDegreeEntry(PreconditionViolated):
    pass


class InternalDivisionFailure(Sl2Error, RuntimeError):
    def __init__(self, index, message=""):
        super().__init__(message or f"exact division failed at i={index}")
        self.index = index


# resources

class BudgetExceeded(Sl2Error, RuntimeError):
    pass


class DegreeBoundExceeded(BudgetExceeded):
    pass


# text front-end

class ParseError(Sl2Error, SyntaxError):
    def __init__(self, message, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.column = col


class NonIntegerExponent(ParseError):
    pass


class NegativeExponent(ParseError):
    pass

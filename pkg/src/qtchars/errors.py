"""Exception hierarchy. Every domain error carries a stable ``name`` printed by the CLI."""


class QtCharsError(Exception):
    name = "QtCharsError"


class InvalidRank(QtCharsError):
    name = "InvalidRank"


class NonUnitConstant(QtCharsError):
    name = "NonUnitConstant"


class Mismatch(QtCharsError):
    name = "Mismatch"


class ParseError(QtCharsError):
    name = "ParseError"


class NotIDominant(QtCharsError):
    name = "NotIDominant"


class NotDominant(QtCharsError):
    name = "NotDominant"


class NotPointed(QtCharsError):
    name = "NotPointed"


class CapExceeded(QtCharsError):
    name = "CapExceeded"

    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"closure exceeded cap={cap}")


class WellDefinednessViolation(QtCharsError):
    name = "WellDefinednessViolation"


class NoSolution(QtCharsError):
    name = "NoSolution"


class NonPolynomialQ(QtCharsError):
    name = "NonPolynomialQ"


class NonPositiveCoefficient(QtCharsError):
    name = "NonPositiveCoefficient"


class NonConstantCoefficient(QtCharsError):
    name = "NonConstantCoefficient"


class UnsupportedFolding(QtCharsError):
    name = "UnsupportedFolding"


class IncompatibleInclusion(QtCharsError):
    name = "IncompatibleInclusion"

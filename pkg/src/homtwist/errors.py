"""Exception hierarchy shared by every layer of the package."""

from __future__ import annotations


class HomtwistError(Exception):
    """Base class for all errors raised by homtwist."""


class DimensionMismatch(HomtwistError, ValueError):
    pass


class InvalidStructure(HomtwistError, ValueError):
    """Structure data is shaped correctly but violates a required axiom."""


class InvalidComodule(InvalidStructure):
    pass


class InvalidClassicalBundle(InvalidStructure):
    pass


class PrecheckFailure(HomtwistError):
    """A hypothesis of a construction does not hold.

    ``failures`` names every precheck that failed, in evaluation order.
    """

    def __init__(self, message: str, failures: tuple[str, ...] = ()):
        super().__init__(message)
        self.failures = failures


class NotAnEndomorphism(PrecheckFailure):
    pass


class CompatibilityFailure(PrecheckFailure):
    pass


class UnknownAxiom(HomtwistError, KeyError):
    pass


class NotAGroup(HomtwistError, ValueError):
    pass


class GradingViolation(HomtwistError, ValueError):
    pass


class NoUnit(HomtwistError, ValueError):
    pass


class SearchSpaceTooLarge(HomtwistError, ValueError):
    pass


class ParseError(HomtwistError, ValueError):
    pass


class SchemaError(ParseError):
    pass


class BadRational(ParseError):
    pass

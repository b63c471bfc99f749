"""Exception hierarchy.

Parameter problems a caller can fix derive from ``ValueError``; internal
consistency failures (two exact routes disagreeing) derive from
``VerificationError`` and always indicate a bug.
"""

from __future__ import annotations


class HullforgeError(Exception):
    pass


# -- field / arithmetic -------------------------------------------------------


class NotPrime(HullforgeError, ValueError):
    pass


class NotPrimePower(HullforgeError, ValueError):
    pass


class DegreeOutOfRange(HullforgeError, ValueError):
    pass


class CapExceeded(HullforgeError, ValueError):
    pass


class FieldDivisionByZero(HullforgeError, ZeroDivisionError):
    pass


class FieldMismatch(HullforgeError, TypeError):
    pass


class NotQuadraticExtension(HullforgeError, ValueError):
    pass


class IncompatibleTower(HullforgeError, ValueError):
    pass


class NotInSubfield(HullforgeError, ValueError):
    pass


# -- matrices / codes ---------------------------------------------------------


class DimensionMismatch(HullforgeError, ValueError):
    pass


class DuplicateLocators(HullforgeError, ValueError):
    pass


class InvalidCode(HullforgeError, ValueError):
    pass


class DegreeTooHigh(HullforgeError, ValueError):
    pass


# -- constructions / derived parameters ----------------------------------------


class ParamsOutOfRange(HullforgeError, ValueError):
    pass


class ExcludedHullDim(ParamsOutOfRange):
    pass


class TargetOutOfRange(HullforgeError, ValueError):
    pass


class DimensionTooLarge(HullforgeError, ValueError):
    pass


class VerificationError(HullforgeError, AssertionError):
    pass


class ConstructionAssertionFailed(VerificationError):
    pass


class SearchExhausted(VerificationError):
    pass


class RankIdentityViolated(VerificationError):
    pass

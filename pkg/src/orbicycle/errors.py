"""Exception types raised by orbicycle.

The class names double as the error names printed by the CLI.
"""

from __future__ import annotations


class OrbicycleError(Exception):
    """Base class for every domain error in the package."""


class RepeatedPoint(OrbicycleError, ValueError):
    pass


class PointOutOfRange(OrbicycleError, ValueError):
    pass


class DegreeMismatch(OrbicycleError, ValueError):
    pass


class OrderCapExceeded(OrbicycleError, RuntimeError):
    pass


class NotPrime(OrbicycleError, ValueError):
    pass


class DegreeTooSmall(OrbicycleError, ValueError):
    pass


class BadSpec(OrbicycleError, ValueError):
    pass


class ZeroPolynomial(OrbicycleError, ValueError):
    pass


class NoConvergence(OrbicycleError, RuntimeError):
    pass


class NonIntegral(OrbicycleError, ValueError):
    pass


class NonIntegralWreathComposition(NonIntegral):
    pass


class NonDivisible(OrbicycleError, ArithmeticError):
    pass


class BruteforceTooLarge(OrbicycleError, ValueError):
    pass


class TooLarge(BruteforceTooLarge):
    pass


class ArgMismatch(OrbicycleError, ValueError):
    pass


class OrderMismatch(OrbicycleError, ValueError):
    pass


class NotInvariant(OrbicycleError, ValueError):
    pass


class DegreeTooLarge(OrbicycleError, ValueError):
    pass


class DegreeTooLargeForBruteForce(DegreeTooLarge):
    pass

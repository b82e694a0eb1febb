"""Exception hierarchy. Every error raised by the package derives from GarlandError."""

from __future__ import annotations


class GarlandError(Exception):
    pass


class InvalidInput(GarlandError):
    """Malformed or structurally invalid input (CLI exit code 2)."""


class EmptyComplex(InvalidInput):
    pass


class NotPure(InvalidInput):
    pass


class UnknownSimplex(InvalidInput):
    pass


class NonPositiveWeight(InvalidInput):
    pass


class BalanceViolation(InvalidInput):
    def __init__(self, simplex, expected, found):
        self.simplex = simplex
        self.expected = expected
        self.found = found
        super().__init__(
            f"balance law fails at {simplex}: expected C={expected}, found ratio {found}"
        )


class DegreeMismatch(GarlandError):
    pass


class TopDegree(GarlandError):
    pass


class NotSymmetric(GarlandError):
    pass


class EmptyLink(GarlandError):
    pass


class DisconnectedLink(GarlandError):
    def __init__(self, tau, components):
        self.tau = tau
        self.components = components
        super().__init__(f"link of {tau} has {components} connected components")


class SpectralMismatch(GarlandError):
    """Numerical zero multiplicity disagrees with the combinatorial component count."""


class DegenerateDenominator(GarlandError):
    pass


class IndexingFailure(GarlandError):
    pass


class BudgetExhausted(GarlandError):
    pass

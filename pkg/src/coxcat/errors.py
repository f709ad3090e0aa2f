"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CoxcatError(Exception):
    """Base class for all library errors."""


class InvalidInput(CoxcatError, ValueError):
    """Malformed type label, Coxeter matrix or word."""


class NonFiniteType(CoxcatError):
    """The Coxeter matrix does not belong to the finite classification."""


class UnsupportedType(CoxcatError):
    """Finite, but outside what the engine is configured to handle."""


class NotCrystallographic(CoxcatError):
    """A root poset was requested for a non-Weyl type."""


class SystemMismatch(CoxcatError):
    """Two elements from different Coxeter systems were combined."""


class NotAReflection(CoxcatError):
    pass


class NotCoxeterElement(CoxcatError):
    pass


class NotInNC(CoxcatError):
    pass


class NotBipartite(CoxcatError):
    pass


class NotComparableInput(CoxcatError):
    """A cover classification was requested on a pair that is not a cover."""


class NotMinimalFactorization(CoxcatError):
    pass


class NotBelowC(CoxcatError):
    pass


class NoCommutationNormalForm(CoxcatError):
    """A needed reordering would swap two non-commuting reflections."""


class NoValidOrdering(CoxcatError):
    pass


class NotFullSupport(CoxcatError):
    pass


class NotACluster(CoxcatError):
    pass


class NotPositiveFace(CoxcatError):
    pass


class NotLLRelated(CoxcatError):
    pass


class BoundExceeded(CoxcatError):
    """An enumeration would exceed the configured size bound."""

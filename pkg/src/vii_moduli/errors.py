"""Exception hierarchy.

Every error a caller can trigger with well-formed but mathematically
inadmissible input derives from :class:`DomainError`; the CLI maps those to
exit status 2.
"""
from __future__ import annotations


class DomainError(ValueError):
    """Base class for inputs that are syntactically fine but not admissible."""


class OddChernClass(DomainError):
    """Square root requested for a line bundle with odd first Chern class."""


class UnsupportedName(DomainError):
    """Named line bundle does not exist on the given surface."""


class ConstraintViolation(DomainError):
    """Surface or bundle parameters violate a model invariant."""


class WrongChernClass(DomainError):
    """A Pic^0 argument (n = 0) was required."""


class AmbiguousFamily(DomainError):
    """Central terms over ``L`` form a CP^1 family with no canonical member."""

    def __init__(self, L, ext_dim: int = 2) -> None:
        super().__init__(f"extensions over {L} form a CP^1 family (dim Ext^1 = {ext_dim})")
        self.L = L
        self.ext_dim = ext_dim


class OnlyTrivialExtension(DomainError):
    """No non-trivial extension of type A exists for ``R``."""

    def __init__(self, R) -> None:
        super().__init__(f"{R} is not in R(S); only the trivial extension exists")
        self.R = R


class NotApplicable(DomainError):
    """Operation undefined for this bundle (e.g. not simple)."""


class UndefinedPoint(DomainError):
    """No simple bundle sits over the requested parameter."""


class InternalInconsistency(RuntimeError):
    """A computed invariant failed; indicates a bug, never user error."""

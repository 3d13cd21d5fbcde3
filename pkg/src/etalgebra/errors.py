"""Exception hierarchy.

The CLI maps these onto exit codes: InvalidInputError -> 1,
DomainError (and subclasses) -> 2, BudgetExceededError -> 3.
"""


class AlgebraError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(AlgebraError, ValueError):
    """Malformed operand: wrong shape, violated precondition, bad encoding."""


class DomainError(AlgebraError):
    """The input is well formed but lies outside the domain of a map."""


class NotInUError(DomainError):
    """Element's minimal polynomial is not squarefree of full degree."""


class TransversalityError(DomainError):
    """Subalgebra meets the fixed complement nontrivially."""


class BoundaryError(DomainError):
    """Point lies outside the dense open set where a birational map is defined."""


class NotDecomposableError(DomainError):
    """Plucker relation fails, so the point is not a 2-plane."""


class UnsupportedSplittingError(DomainError):
    """Splitting would leave the supported tower family."""


class UnsupportedError(DomainError):
    """Question is not decidable with the implemented methods."""


class StructuralError(DomainError):
    """Object violates a structural invariant of a central simple algebra."""


class CharacteristicError(DomainError):
    """Operation is not defined in the field's characteristic."""


class ExhaustionError(DomainError):
    """A deterministic search ran out of candidates.

    ``exhaustive`` is true when every element was tried, in which case the
    absence is a proof rather than a budget artefact.
    """

    def __init__(self, message, exhaustive=False):
        super().__init__(message)
        self.exhaustive = exhaustive


class BudgetExceededError(AlgebraError):
    """Enumeration would exceed the configured candidate budget."""

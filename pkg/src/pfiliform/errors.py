class AlgebraError(ValueError):
    """Base class for invalid algebras, elements and parameters."""


class NotNilpotentError(AlgebraError):
    pass


class ElementInSquareError(AlgebraError):
    """Raised when a characteristic sequence is requested for an element of A^2."""


class NotNaturallyGradedError(AlgebraError):
    pass


class InconsistentGradationError(AlgebraError):
    pass


class BudgetExceededError(AlgebraError):
    pass

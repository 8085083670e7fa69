"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the region where a routine is defined or convergent."""


class DivergenceError(DomainError):
    """The requested series diverges at this argument."""


class SingularityError(DomainError):
    """A closed form hits an excluded denominator value with no limit branch."""


class NoConvergence(ArithmeticError):
    """Series truncation hit its term cap before reaching tolerance."""


class QuadratureFailure(ArithmeticError):
    """Adaptive quadrature exceeded its refinement depth."""

"""Exception hierarchy."""


class PCFError(Exception):
    """Base class for evaluation errors raised by this package."""


class GammaPoleError(PCFError, ValueError):
    """Argument sits on (or numerically at) a pole of Gamma."""


class NonconvergentRayError(PCFError, ValueError):
    """The Laplace factor ``exp(-p y)`` does not decay along the requested ray."""


class SingularRayError(PCFError, ValueError):
    """A branch point of the integrand lies on (or next to) the integration ray."""


class DomainError(PCFError, ValueError):
    """Argument outside the sector where the requested direct evaluation is valid."""


class FinitePartPoleError(PCFError, ValueError):
    """Hadamard finite part requested at a pole ``alpha in {0, -1, -2, ...}``."""


class SeriesTruncationError(PCFError, ArithmeticError):
    """Taylor head did not converge within the allowed number of terms."""


class QuadratureError(PCFError, ArithmeticError):
    """Quadrature failed to reach the requested tolerance."""


class StencilError(PCFError, ValueError):
    """Finite-difference stencil leaves the evaluable region."""

"""Exception types raised by elmlab."""


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


class NonPositiveInput(DomainError):
    """A mean was asked for a non-positive argument."""


class ParamError(ValueError):
    """A shape parameter (not the modulus) is out of range."""


class NonFinite(ValueError):
    """A parameter that must be finite is inf or nan."""


class NoConvergence(ArithmeticError):
    """An iteration failed to settle within its budget."""

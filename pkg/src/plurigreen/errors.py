"""Exception types shared across the toolkit."""


class DomainError(ValueError):
    """An argument lies outside the set where the operation is defined."""


class DegenerateError(ArithmeticError):
    """A composition or sample set vanishes identically.

    Callers translate this into the documented conventions, e.g. a
    Lelong value of -inf or an empty pullback divisor.
    """


class NumericError(ArithmeticError):
    """A numerical sub-step (root finding, clustering) did not converge."""


class InfeasibleError(RuntimeError):
    """No restart of the disc optimizer produced a certified-contained disc."""

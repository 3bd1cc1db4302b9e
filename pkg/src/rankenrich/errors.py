"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter is outside its legal domain."""


class InputError(ValueError):
    """An input document could not be parsed or is internally inconsistent."""


class SizeError(ValueError):
    """A brute-force computation was requested at an infeasible size."""


class UnderflowWarning(RuntimeWarning):
    """A recurrence step received an exactly-zero probability after a nonzero start.

    Silent underflow in the recurrence chains can corrupt rejection-region
    boundaries, so the kernel flags it instead of failing.
    """

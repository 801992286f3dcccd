"""Exception types shared across the library."""


class ShapeMismatchError(ValueError):
    """A vector or matrix does not match the block shape it is paired with."""


class BudgetExhaustedError(RuntimeError):
    """A read was requested past the end of the random-bit budget."""

    def __init__(self, needed: int, available: int):
        super().__init__(
            f"bit budget exhausted: {needed} bits needed, {available} available"
        )
        self.needed = needed
        self.available = available


class DegenerateRandomnessError(RuntimeError):
    """The seed bits produced a numerically rank-deficient Gaussian matrix."""


class CapacityError(ValueError):
    """A dense operation would exceed the configured element cap."""


class UnsupportedDimensionError(ValueError):
    """Certified estimation was requested above the dimension it supports."""


class InfeasiblePlanError(ValueError):
    """No valid construction plan exists; ``report`` names the binding constraint."""

    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report

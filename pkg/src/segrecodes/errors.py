"""Exception types raised across the package."""


class SegreCodesError(Exception):
    """Base class for all package errors."""


class NotPrimePower(SegreCodesError, ValueError):
    pass


class UnsupportedField(SegreCodesError, ValueError):
    pass


class DivisionByZero(SegreCodesError, ZeroDivisionError):
    pass


class ZeroVector(SegreCodesError, ValueError):
    pass


class DuplicatePoint(SegreCodesError, ValueError):
    def __init__(self, first: int, second: int, coords=None):
        self.first = first
        self.second = second
        self.coords = coords
        super().__init__(
            f"points {first} and {second} are the same projective point {coords}"
        )


class FieldMismatch(SegreCodesError, ValueError):
    pass


class DimensionMismatch(SegreCodesError, ValueError):
    pass


class DegenerateField(SegreCodesError, ValueError):
    pass


class BudgetExceeded(SegreCodesError, RuntimeError):
    def __init__(self, needed: int, budget: int, what: str = "enumeration"):
        self.needed = needed
        self.budget = budget
        self.what = what
        super().__init__(f"{what} needs {needed} steps, budget is {budget}")

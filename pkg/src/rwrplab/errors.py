"""Exception types shared across the lab."""


class RwrplabError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedDimensionError(RwrplabError):
    """Exact face enumeration is only supported for d <= 4."""


class NotInConeError(RwrplabError):
    """Requested point lies outside the nonnegative cone of the steps."""


class NotRepresentableError(RwrplabError):
    """Integer point is in the cone but not in the step semigroup."""


class DegenerateInputError(RwrplabError):
    """Input is degenerate for the requested operation (e.g. zero direction)."""


class LoopSearchError(RwrplabError):
    """Loop representation search exceeded its depth cap."""


class CapacityError(RwrplabError):
    """Requested box exceeds the in-memory budget."""


class UnreachableError(RwrplabError):
    """Target is not reachable from the origin by admissible steps."""


class AssumptionViolationError(RwrplabError):
    """A realized potential violates the standing sign assumption."""


class IterationLimitError(RwrplabError):
    """Fixed-point iteration failed to converge within its cap."""


class DivergentSeriesError(RwrplabError):
    """Weighted-kernel series diverges on the requested box (spectral radius >= 1)."""


class MaxPlusDivergenceError(RwrplabError):
    """Max-plus fixed point diverges (tilt too aggressive)."""


class BudgetExceededError(RwrplabError):
    """Exhaustive enumeration budget exceeded."""


class SchemaError(RwrplabError):
    """A configuration document failed validation."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")

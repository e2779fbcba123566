"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: InputError -> 2 (bad input),
ComputationRefused and EngineError -> 1 (computation refused / internal
inconsistency). Everything derives from AsmtreeError.
"""


class AsmtreeError(Exception):
    pass


class InputError(AsmtreeError, ValueError):
    """Malformed parameters, JSON, or out-of-range arguments."""


class ComputationRefused(AsmtreeError, RuntimeError):
    """A guard rejected the computation (caps, connectivity, empty graph)."""


class CapExceeded(ComputationRefused):
    pass


class DisconnectedGraph(ComputationRefused):
    pass


class LeadingCoefficientZero(ComputationRefused):
    """The leading recurrence polynomial vanishes at a needed index."""

    def __init__(self, index: int):
        super().__init__(f"leading polynomial vanishes at index {index}")
        self.index = index


class NoConvergentExponent(ComputationRefused):
    """No candidate polynomial exponent yields a convergent constant."""


class EngineError(AsmtreeError, RuntimeError):
    """Internal inconsistency; signals a bug, not bad input."""

"""
error hierarchy for the heat engine library

every error raised on purpose by the library derives from HeatEngineError;
the cli maps the subclasses onto exit codes
"""

from typing import Optional

class HeatEngineError(Exception):
    """
    base class for all library errors
    """

class DomainError(HeatEngineError, ValueError):
    """
    an input is non-finite, non-positive or otherwise outside its domain
    """

class ConvergenceError(HeatEngineError, RuntimeError):
    """
    an oracle series did not reach its tail tolerance within the term cap

    :param message: human readable description
    :type message: str
    :param termsReached: number of terms reached when the cap was hit
    :type termsReached: int
    """

    def __init__(self, message: str, termsReached: int):
        super().__init__(message)
        self.termsReached = termsReached

class RegimeError(HeatEngineError):
    """
    the first-order gup expansion is outside its validity gate

    :param delta: the offending gup expansion parameter
    :type delta: float
    :param threshold: the configured gate threshold
    :type threshold: float
    """

    def __init__(self, delta: float, threshold: float, where: Optional[str] = None):
        location = f" at {where}" if where else ""

        super().__init__(
            f"GUP expansion parameter delta={delta:.6g}{location} exceeds threshold {threshold:.6g}"
        )

        self.delta = delta
        self.threshold = threshold

class ContractError(HeatEngineError, ValueError):
    """
    a process invariant does not hold, or a leg was handed to the wrong operation
    """

class SpecError(HeatEngineError, ValueError):
    """
    a cycle or sweep specification is invalid
    """

class PoleError(DomainError):
    """
    a figure function was evaluated inside its pole exclusion band
    """

class DegenerateCycleError(HeatEngineError, ArithmeticError):
    """
    the cycle absorbs no heat, so its efficiency is undefined
    """

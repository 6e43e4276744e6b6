"""Exception hierarchy shared by every module.

Input problems subclass ValueError, broken internal state subclasses RuntimeError,
so callers that only know the builtin types still catch them.
"""

from fractions import Fraction
from typing import Optional


class AcyclicColoringError(Exception):
    """Base class for all errors raised by the package."""


class GraphParseError(AcyclicColoringError, ValueError):
    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")


class GraphDomainError(AcyclicColoringError, ValueError):
    pass


class GenerationError(AcyclicColoringError, ValueError):
    pass


class ParameterError(AcyclicColoringError, ValueError):
    def __init__(self, message: str, suggested_kappa: Optional[Fraction] = None):
        self.suggested_kappa = suggested_kappa
        if suggested_kappa is not None:
            message = f"{message} (smallest valid kappa: {float(suggested_kappa):.4f} = {suggested_kappa})"
        super().__init__(message)


class CandidateListError(AcyclicColoringError, RuntimeError):
    pass


class InvariantViolation(AcyclicColoringError, RuntimeError):
    pass


class RecordCorruptionError(AcyclicColoringError, RuntimeError):
    def __init__(self, message: str, step_index: Optional[int] = None):
        self.step_index = step_index
        prefix = f"step {step_index}: " if step_index is not None else ""
        super().__init__(f"{prefix}{message}")


class VerificationInputError(AcyclicColoringError, ValueError):
    pass


class OracleRefusal(AcyclicColoringError, ValueError):
    pass

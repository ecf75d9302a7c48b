"""
Error classes and violation records used across blocksym.

Input problems (bad profiles, dent sets, shapes, parameters, size refusals)
derive from ``BlockSymInputError`` and map to CLI exit code 2. A failed
verification suite raises ``VerificationError`` (exit code 1) carrying its
counterexamples. ``RingError`` signals a broken exactness guarantee inside the
polynomial ring and is never the user's fault.

Classes:
    Violation: A path/value/reason record describing one failure.
    Counterexample: A violation found by a verification suite.
    BlockSymError: Base class for all blocksym errors.
    BlockSymInputError: Invalid user input.
    InvalidProfileError: Block profile sizes are inconsistent.
    InvalidDentSetError: A dent set is not strictly increasing or out of range.
    InvalidShapeError: A partition, skew shape or plane partition is malformed.
    InvalidParameterError: A numeric parameter is outside its admissible range.
    SizeLimitError: Estimated work exceeds the configured size limit.
    RingError: Inexact division or a non-integral ratio in exact arithmetic.
    VerificationError: A verification suite found counterexamples.
"""

from dataclasses import dataclass
from typing import Any, Optional


@dataclass
class Violation:
    """
    A single failure record.

    Attributes:
        path (str): Where the failure happened (flag name, instance key, ...).
        value (Any): The offending or observed value.
        reason (str): What is wrong with it.
    """

    path: str
    value: Any
    reason: str

    def format(self) -> str:
        """
        Returns:
            str: A multi-line, indented rendering of the violation.
        """
        is_stringer = isinstance(self.value, (str, int, float, bool))
        path__ = f"Path    :  {self.path}"
        value_ = f"Value   :  {self.value if is_stringer else str(self.value)}"
        reason = f"Reason  :  {self.reason}"
        return "\n    ".join(["Violation:".ljust(10), path__, value_, reason])


@dataclass
class Counterexample(Violation):
    """
    A verification instance whose two sides disagree.

    ``path`` holds the instance key, e.g. ``r=(1,1)``.
    """
    pass


class BlockSymError(RuntimeError):
    """Base class for all blocksym errors."""
    pass


class BlockSymInputError(BlockSymError):
    """
    Raised for invalid user input.

    Attributes:
        flag (str | None): The command-line flag the input came from, if known.
    """

    def __init__(self, msg: str, flag: Optional[str] = None):
        super().__init__(msg)
        self.flag = flag

    def diagnostic(self) -> str:
        """
        Returns:
            str: One line naming the offending flag when it is known.
        """
        if self.flag:
            return f"{self.flag}: {self}"
        return str(self)


class InvalidProfileError(BlockSymInputError):
    pass


class InvalidDentSetError(BlockSymInputError):
    pass


class InvalidShapeError(BlockSymInputError):
    pass


class InvalidParameterError(BlockSymInputError):
    pass


class SizeLimitError(BlockSymInputError):
    """
    Raised when the estimated amount of enumeration is above the limit.

    Attributes:
        estimate (int): Estimated number of objects to enumerate.
        limit (int): The limit in force.
    """

    def __init__(self, what: str, estimate: int, limit: int, flag: Optional[str] = None, unit: str = "objects"):
        super().__init__(
            f"refusing to enumerate {what}: about {estimate} {unit}, limit is {limit} "
            f"(override with --unsafe-max)",
            flag,
        )
        self.estimate = estimate
        self.limit = limit


class RingError(BlockSymError):
    """Raised when an exact division or an integral ratio turns out inexact."""
    pass


class VerificationError(BlockSymError):
    """
    Raised when a verification suite fails.

    Attributes:
        suite (str): Suite name.
        checked (int): Number of instances checked.
        counterexamples (list[Counterexample]): The failing instances.
        violations (list[Violation]): Other failures (errors raised by instances).
    """

    def __init__(self, msg: str, suite: str, checked: int,
                 counterexamples: list[Counterexample] = None,
                 violations: list[Violation] = None):
        super().__init__(msg)
        self.suite = suite
        self.checked = checked
        self.counterexamples = counterexamples or []
        self.violations = violations or []

    @property
    def all_violations(self) -> list[Violation]:
        """
        Returns:
            list[Violation]: Counterexamples followed by other violations.
        """
        return self.counterexamples + self.violations


__all__ = (
    'Violation',
    'Counterexample',
    'BlockSymError',
    'BlockSymInputError',
    'InvalidProfileError',
    'InvalidDentSetError',
    'InvalidShapeError',
    'InvalidParameterError',
    'SizeLimitError',
    'RingError',
    'VerificationError',
)

"""Exception hierarchy.

Everything a caller can reasonably trigger with bad input derives from
:class:`MuBasisError`.  :class:`InvariantError` marks a broken internal
guarantee and is deliberately kept apart from the expected failures.
"""

from __future__ import annotations


class MuBasisError(Exception):
    """Base class for expected failures.

    ``step`` is the number of the ruled-surface algorithm step that
    rejected the input, when there is one.
    """

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.message = message
        self.step = step

    def __str__(self) -> str:
        if self.step is None:
            return self.message
        return f"step {self.step}: {self.message}"


class InputError(MuBasisError):
    """Malformed input: wrong arity, wrong variables, empty file..."""


class ParseError(InputError):
    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        super().__init__(message)
        self.offset = offset
        self.expected = frozenset(expected)

    def __str__(self) -> str:
        text = f"{self.message} at offset {self.offset}"
        if self.expected:
            text += " (expected one of: " + ", ".join(sorted(self.expected)) + ")"
        return text


class NotRuledError(MuBasisError):
    """Input is not linear in t."""


class DegenerateError(MuBasisError):
    """The parametrization does not define a surface (or a curve)."""


class InexactDivisionError(ArithmeticError):
    """An exact division left a nonzero remainder."""

    def __init__(self, dividend, divisor, remainder):
        super().__init__(f"division is not exact: remainder {remainder!r}")
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder


class InvariantError(RuntimeError):
    """A mathematical guarantee failed; this is a bug, not a bad input."""

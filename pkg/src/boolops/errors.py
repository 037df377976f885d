"""Exception types shared across the package."""

from __future__ import annotations


class LogicError(Exception):
    """Base class for every error raised by this package."""


class ParseError(LogicError):
    """Formula text could not be parsed.

    ``position`` is the 1-based character offset of the offending token,
    ``expected`` the set of token descriptions acceptable at that point.
    """

    def __init__(self, message: str, position: int, expected=()):
        self.position = position
        self.expected = frozenset(expected)
        super().__init__(f"{message} (column {position})")


class DomainError(LogicError):
    """An argument lies outside an operation's declared domain."""


class UnboundVariableError(DomainError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"variable {name!r} is not in the variable order")


class ArityMismatchError(DomainError):
    """Operands built over different numbers of arguments were combined."""


class ArityCapError(DomainError):
    """An operation would enumerate more than 2**cap rows."""

    def __init__(self, arity: int, cap: int):
        self.arity = arity
        self.cap = cap
        super().__init__(f"arity {arity} exceeds the cap of {cap}")


class DenseCapError(DomainError):
    """A dense 2**n x 2**n matrix was requested above the dense cap."""

    def __init__(self, arity: int, cap: int):
        self.arity = arity
        self.cap = cap
        super().__init__(
            f"dense export for arity {arity} exceeds the dense cap of {cap}"
        )


class NonInterpretableError(DomainError):
    """A polynomial takes a value outside {0, 1} at some 0/1 point."""

    def __init__(self, bits: tuple[int, ...], value: int):
        self.bits = bits
        self.value = value
        super().__init__(
            f"value {value} at interpretation {''.join(map(str, bits))!r} "
            f"is not in {{0, 1}}"
        )


class InvariantViolation(LogicError):
    """A machine-checked algebraic identity failed; indicates a bug."""

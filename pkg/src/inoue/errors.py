"""Exception hierarchy shared by all subpackages."""

from __future__ import annotations


class InoueError(Exception):
    """Base class for every error raised by this package."""


class InputFormatError(InoueError, ValueError):
    """A matrix or polynomial file could not be parsed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class BitLengthExceeded(InoueError, ArithmeticError):
    """An intermediate integer grew past the configured bit-length cap."""

    def __init__(self, bits: int, cap: int):
        self.bits = bits
        self.cap = cap
        super().__init__(f"intermediate integer has {bits} bits, cap is {cap}")


class ZeroDivisorError(InoueError, ZeroDivisionError):
    """A non-invertible nonzero element turned up in Q[x]/(f); f is reducible.

    ``factor`` holds the nontrivial common divisor that was found.
    """

    def __init__(self, modulus, factor):
        self.modulus = modulus
        self.factor = factor
        super().__init__(f"modulus {modulus} is reducible: shares factor {factor}")


class RootOnEndpoint(InoueError, ValueError):
    """An interval endpoint is an exact root; perturb and retry."""


class PrecisionError(InoueError):
    """Certification failed at the working precision.

    ``suggested_bits`` is a precision that is likely to succeed.
    """

    def __init__(self, message: str, suggested_bits: int | None = None):
        self.suggested_bits = suggested_bits
        if suggested_bits is not None:
            message += f" (retry with bits >= {suggested_bits})"
        super().__init__(message)


class InternalInconsistency(InoueError, AssertionError):
    """A self-check failed. This indicates a bug, not bad input."""


class HypothesisViolation(InoueError, ValueError):
    """Input violates a mathematical precondition (e.g. eigenvalue 1)."""


class ConfigError(InoueError, ValueError):
    """Invalid configuration values."""


class Rejection(InoueError):
    """An input failed a certification gate.

    ``reason`` is a short machine-readable tag, ``details`` a dict with the
    evidence that led to the rejection.
    """

    def __init__(self, reason: str, details: dict | None = None):
        self.reason = reason
        self.details = details or {}
        super().__init__(reason)

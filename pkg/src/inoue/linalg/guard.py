"""Bit-length guardrail for intermediate integers.

The cap lives in a context variable so that concurrent callers can use
different limits without sharing mutable state.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar

from ..errors import BitLengthExceeded

DEFAULT_BIT_CAP = 1_000_000

_bit_cap: ContextVar[int] = ContextVar("bit_cap", default=DEFAULT_BIT_CAP)


def get_bit_cap() -> int:
    return _bit_cap.get()


@contextmanager
def bit_length_cap(bits: int):
    """Temporarily change the cap, e.g. ``with bit_length_cap(64): ...``."""
    token = _bit_cap.set(bits)
    try:
        yield
    finally:
        _bit_cap.reset(token)


def check_bits(*values: int) -> None:
    cap = _bit_cap.get()
    for v in values:
        b = int(v).bit_length()
        if b > cap:
            raise BitLengthExceeded(b, cap)

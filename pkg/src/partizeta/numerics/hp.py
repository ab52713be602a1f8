"""Precision policy for the high-precision kernel.

Values are mpmath ``mpf``/``mpc``. Every public evaluation routine takes an
explicit ``prec`` (binary precision in bits, default 256) and computes under a
guarded working precision, rounding the result back to ``prec``. Nothing in
this package reads or mutates the global mpmath context outside a ``workprec``
block, so concurrent use from several threads is safe as long as callers do
the same.
"""

from __future__ import annotations

import mpmath as mp

DEFAULT_PREC = 256
GUARD_BITS = 40


def working(prec: int, extra: int = 0):
    """Context manager: guarded working precision for ``prec``-bit results."""
    return mp.workprec(prec + GUARD_BITS + extra)


def to_prec(x, prec: int):
    """Round x to prec bits (identity rounding via a context-local add)."""
    with mp.workprec(prec):
        return +x


def default_tol(prec: int, drop: int = 8):
    """2^-(prec-drop), the standard relative-accuracy contract of the kernel."""
    return mp.mpf(2) ** (-(prec - drop))


def digits_for(prec: int) -> int:
    """Decimal digits that faithfully represent a prec-bit value."""
    return int(prec * 0.301) + 1

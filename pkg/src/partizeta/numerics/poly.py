"""Dense polynomial helpers shared by the zeta-polynomial machinery.

Polynomials are plain coefficient lists c_0..c_n (lowest degree first), over
Fraction (PolyQ convention) or mpf/mpc (PolyC convention). Evaluation is
Horner; nothing here owns precision, callers manage contexts.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath as mp


def poly_eval(coeffs, x):
    acc = x * 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_degree(coeffs):
    for i in range(len(coeffs) - 1, -1, -1):
        if coeffs[i] != 0:
            return i
    return -1


def poly_trim(coeffs, rel_tol=None):
    """Drop (near-)zero leading coefficients; relative to the sup norm."""
    if not coeffs:
        return []
    if rel_tol is None:
        out = list(coeffs)
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out
    norm = max(abs(c) for c in coeffs)
    out = list(coeffs)
    while len(out) > 1 and abs(out[-1]) <= rel_tol * norm:
        out.pop()
    return out


def poly_compose_one_minus_s(coeffs):
    """q with q(s) = p(1 - s), exact binomial expansion in the coefficient domain."""
    n = len(coeffs)
    out = [c * 0 for c in coeffs]
    for h, c in enumerate(coeffs):
        if c == 0:
            continue
        for i in range(h + 1):
            out[i] += c * math.comb(h, i) * (-1) ** i
    return out


def poly_negate_var(coeffs):
    """p(-s)."""
    return [c if i % 2 == 0 else -c for i, c in enumerate(coeffs)]


def binomial_poly(shift: int, e: int) -> list[Fraction]:
    """C(s + shift, e) as an exact polynomial in s (degree e)."""
    co = [Fraction(1)]
    for i in range(1, e + 1):
        c0 = Fraction(shift - i + 1)
        new = [Fraction(0)] * (len(co) + 1)
        for j, c in enumerate(co):
            new[j] += c * c0
            new[j + 1] += c
        co = new
    f = Fraction(math.factorial(e))
    return [c / f for c in co]


def poly_to_mpc(coeffs, prec: int):
    with mp.workprec(prec):
        out = []
        for c in coeffs:
            if isinstance(c, Fraction):
                out.append(mp.mpf(c.numerator) / c.denominator)
            else:
                out.append(mp.mpmathify(c))
        return out

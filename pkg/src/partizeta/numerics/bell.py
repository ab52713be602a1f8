"""Complete Bell polynomials by two independent routes.

Route one: exp of the formal series sum_j a_j x^j / j!, reading off
k! [x^k]. Route two: the k x k Hessenberg determinant with binomially
weighted entries and -1 subdiagonal, expanded by the subdiagonal. The
public entry point computes both and insists they agree; a mismatch is an
internal-defect signal, not a user error.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .series import TruncatedSeries


def hessenberg_det(entry, k):
    """det of the k x k upper-Hessenberg matrix with -1 subdiagonal.

    entry(i, j) gives the (i, j) element for 1 <= i <= j <= k. Expansion by
    the -1 subdiagonal collapses to D_j = sum_i entry(i, j) D_{i-1}.
    """
    D = [1]
    for j in range(1, k + 1):
        s = None
        for i in range(1, j + 1):
            t = entry(i, j) * D[i - 1]
            s = t if s is None else s + t
        D.append(s)
    return D[k]


def bell_via_series(a):
    """B_k(a_1..a_k) = k! [x^k] exp(sum_j a_j x^j / j!)."""
    k = len(a)
    exact = all(isinstance(v, (int, Fraction)) for v in a)
    coeffs = [Fraction(0) if exact else a[0] * 0]
    for j in range(1, k + 1):
        coeffs.append(Fraction(a[j - 1], math.factorial(j)) if exact
                      else a[j - 1] / math.factorial(j))
    E = TruncatedSeries(coeffs, k).exp()
    return E[k] * math.factorial(k)


def bell_via_determinant(a):
    """B_k via the Faa di Bruno determinant: M[i][j] = C(k-i, j-i) a_{j-i+1}."""
    k = len(a)

    def entry(i, j):
        return math.comb(k - i, j - i) * a[j - i]

    return hessenberg_det(entry, k)


def complete_bell(a, tol=None):
    """B_k(a_1..a_k), both routes compared.

    Exact domains must agree exactly; floating domains within ``tol``
    (default: 2^-30 absolute+relative mix). Disagreement raises
    ArithmeticError.
    """
    if not a:
        raise ValueError("complete_bell wants k >= 1 values")
    v1 = bell_via_series(a)
    v2 = bell_via_determinant(a)
    exact = all(isinstance(v, (int, Fraction)) for v in a)
    if exact:
        if v1 != v2:
            raise ArithmeticError(f"Bell routes disagree: {v1} vs {v2}")
        return v1
    if tol is None:
        tol = 2.0 ** -30
    scale = 1 + abs(v1)
    if abs(v1 - v2) > tol * scale:
        raise ArithmeticError(f"Bell routes disagree: {v1} vs {v2}")
    return v1

"""Fixed-length partition zeta values, equal-argument MZVs, and the
composition decoupling between them.

The length-k value over all partitions (weak inequalities) is
[y^{mk}] exp(sum_j zeta(mj) y^{mj} / j); the strict-inequality MZV analogue
flips the sign inside the exp and carries (-1)^k. For even arguments both
reduce to exact rationals times a power of pi, computed either from the
series with exact zeta rationals or from a Hessenberg determinant with
factorial-weighted zeta entries; the two routes must agree identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .numerics import (
    DEFAULT_PREC,
    TruncatedSeries,
    hessenberg_det,
    riemann_zeta,
    working,
    zeta_even_rational,
)


@dataclass(frozen=True)
class MZVIndex:
    """Exponent tuple (m_1, ..., m_k); m_1 sits on the outermost (largest)
    summation variable, so convergence needs m_1 >= 2."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if not self.exponents or any(m < 1 for m in self.exponents):
            raise ValueError("exponents must be positive integers")

    @property
    def length(self):
        return len(self.exponents)

    def is_convergent(self):
        return self.exponents[0] >= 2


def compositions(k: int) -> list[tuple[int, ...]]:
    """All 2^{k-1} compositions of k, in first-part-ascending order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = []
    def rec(rem, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for first in range(1, rem + 1):
            acc.append(first)
            rec(rem - first, acc)
            acc.pop()
    rec(k, [])
    return out


# ----------------------------------------------------------------------
def fixedlen_zeta(m: int, k: int, prec: int = DEFAULT_PREC):
    """zeta over length-k partitions at integer argument m >= 2.

    pi^{mk} [z^{mk}] exp(sum_j zeta(mj)/j (z/pi)^{mj}), evaluated directly in
    the y = z/pi variable so the pi powers cancel: [y^{mk}] exp(...).
    """
    if m < 2 or k < 0:
        raise ValueError("need m >= 2, k >= 0")
    if k == 0:
        with mp.workprec(prec):
            return mp.mpf(1)
    with working(prec, extra=16):
        T = m * k
        A = [mp.mpf(0)] * (T + 1)
        for j in range(1, k + 1):
            A[m * j] = riemann_zeta(m * j, mp.mp.prec) / j
        val = TruncatedSeries(A, T).exp()[T]
    with mp.workprec(prec):
        return +val


def fixedlen_zeta_exact(m: int, k: int) -> Fraction:
    """Exact rational r with zeta over length-k partitions = r * pi^{mk}.

    Even m only (odd zeta values have no exact path). Computed from the k x k
    Hessenberg determinant with entries zeta(m(j-i+1)) (k-i)!/(pi^{...}(k-j)!)
    expanded by the -1 subdiagonal, divided by k!.
    """
    if m < 2 or m % 2:
        raise ValueError("exact route needs even m >= 2")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return Fraction(1)
    fact = [Fraction(math.factorial(i)) for i in range(k + 1)]

    def alpha(i, j):
        r = j - i + 1
        return zeta_even_rational(m * r) * fact[k - i] / fact[k - j]

    return hessenberg_det(alpha, k) / fact[k]


def fixedlen_zeta_exact_series(m: int, k: int) -> Fraction:
    """Same rational through the exp-series route; oracle for the determinant."""
    if m < 2 or m % 2:
        raise ValueError("exact route needs even m >= 2")
    if k == 0:
        return Fraction(1)
    T = m * k
    A = [Fraction(0)] * (T + 1)
    for j in range(1, k + 1):
        A[m * j] = zeta_even_rational(m * j) / j
    return TruncatedSeries(A, T).exp()[T]


def mzv_equal_args(n: int, k: int, prec: int = DEFAULT_PREC):
    """zeta({n}^k) = (-1)^k [z^{nk}] exp(-sum_j zeta(nj)/j z^{nj})."""
    if n < 2 or k < 0:
        raise ValueError("need n >= 2, k >= 0")
    if k == 0:
        with mp.workprec(prec):
            return mp.mpf(1)
    with working(prec, extra=16):
        T = n * k
        A = [mp.mpf(0)] * (T + 1)
        for j in range(1, k + 1):
            A[n * j] = -riemann_zeta(n * j, mp.mp.prec) / j
        val = (-1) ** k * TruncatedSeries(A, T).exp()[T]
    with mp.workprec(prec):
        return +val


def mzv_equal_args_exact(n: int, k: int) -> Fraction:
    """Exact rational r with zeta({n}^k) = r * pi^{nk}, even n.

    Determinant route with beta entries -zeta(n(j-i+1)) (k-i)!/(k-j)!; the
    pi powers are homogeneous along the expansion, so the rational factors
    separate cleanly.
    """
    if n < 2 or n % 2:
        raise ValueError("exact route needs even n >= 2")
    if k == 0:
        return Fraction(1)
    fact = [Fraction(math.factorial(i)) for i in range(k + 1)]

    def beta(i, j):
        r = j - i + 1
        return -zeta_even_rational(n * r) * fact[k - i] / fact[k - j]

    return Fraction((-1) ** k) * hessenberg_det(beta, k) / fact[k]


# ----------------------------------------------------------------------
def mzv_bruteforce(index, bound: int, prec: int = 53):
    """Strict nested sum for zeta(m_1, ..., m_k) with n_1 <= bound.

    Certified lower bound of the MZV; the returned tail estimate is the
    product upper bound prod_{j>=2} H_{m_j}(bound) * bound^{1-m_1}/(m_1-1).
    Returns (value, tail_estimate).
    """
    idx = index.exponents if isinstance(index, MZVIndex) else tuple(index)
    idx = MZVIndex(idx)
    if not idx.is_convergent():
        raise ValueError(f"index {idx.exponents}: leading exponent must be >= 2")
    ex = idx.exponents
    k = idx.length
    if bound < k:
        raise ValueError("bound must be at least the length")

    if prec <= 53:
        G = [0.0] * (bound + 1)
        acc = 0.0
        for n in range(1, bound + 1):
            acc += float(n) ** (-ex[-1])
            G[n] = acc
        for lev in range(k - 2, -1, -1):
            acc = 0.0
            new = [0.0] * (bound + 1)
            for n in range(1, bound + 1):
                acc += float(n) ** (-ex[lev]) * G[n - 1]
                new[n] = acc
            G = new
        value = G[bound]
        prefixes = [sum(float(n) ** (-e) for n in range(1, bound + 1)) for e in ex[1:]]
        tail = math.prod(prefixes) * float(bound) ** (1 - ex[0]) / (ex[0] - 1)
        return value, tail

    with working(prec):
        G = [mp.mpf(0)] * (bound + 1)
        acc = mp.mpf(0)
        for n in range(1, bound + 1):
            acc += mp.mpf(n) ** (-ex[-1])
            G[n] = acc
        for lev in range(k - 2, -1, -1):
            acc = mp.mpf(0)
            new = [mp.mpf(0)] * (bound + 1)
            for n in range(1, bound + 1):
                acc += mp.mpf(n) ** (-ex[lev]) * G[n - 1]
                new[n] = acc
            G = new
        value = G[bound]
        tail = mp.mpf(bound) ** (1 - ex[0]) / (ex[0] - 1)
        for e in ex[1:]:
            tail *= mp.fsum(mp.mpf(n) ** (-e) for n in range(1, bound + 1))
    with mp.workprec(prec):
        return +value, +tail


def shuffle_check(s, bound: int, prec: int = DEFAULT_PREC):
    """Length-2 analytic continuation identity: the weak double sum against
    (zeta(2s) + zeta(s)^2)/2. Returns (lhs, rhs, diff, lhs_tail_estimate)."""
    with working(prec):
        sv = mp.mpf(s)
        if sv <= 1:
            raise ValueError("need s > 1")
        rhs = (riemann_zeta(2 * sv, mp.mp.prec) + riemann_zeta(sv, mp.mp.prec) ** 2) / 2
        # weak 2-fold nested partial sum in float when that is enough
        sf = float(sv)
        acc_inner = 0.0
        lhs_f = 0.0
        for n in range(1, bound + 1):
            acc_inner += float(n) ** (-sf)          # H_s(n)
            lhs_f += float(n) ** (-sf) * acc_inner  # n1 = n >= n2
        lhs = mp.mpf(lhs_f)
        tail = riemann_zeta(sv, mp.mp.prec) * mp.mpf(bound) ** (1 - sv) / (sv - 1)
        diff = lhs - rhs
    with mp.workprec(prec):
        return +lhs, +rhs, +diff, +tail


def decoupling_check(m: int, k: int, bound: int, prec: int = DEFAULT_PREC):
    """Fixed-length value vs the sum of strict MZVs over compositions of k.

    lhs = fixedlen_zeta(m, k); rhs = sum over compositions (a_1..a_j) of
    zeta(a_1 m, ..., a_j m) by brute force, coefficient 1 each. Returns
    (lhs, rhs, diff, tail_estimate_sum).
    """
    if m < 2 or k < 1:
        raise ValueError("need m >= 2, k >= 1")
    lhs = fixedlen_zeta(m, k, prec)
    rhs_f = 0.0
    tails = 0.0
    for comp in compositions(k):
        v, t = mzv_bruteforce([a * m for a in comp], bound)
        rhs_f += v
        tails += t
    with mp.workprec(prec):
        rhs = mp.mpf(rhs_f)
        return lhs, rhs, lhs - rhs, mp.mpf(tails)


def length_reduction(n: int, k: int, bound: int = 1000, prec: int = DEFAULT_PREC):
    """zeta({n}^k) as fixedlen_zeta(n, k) minus the shorter-composition MZVs.

    Emits the identity structurally (list of composition terms with sign) and
    verifies it numerically at brute-force scale. Returns a dict with the
    terms, both sides, and the brute-force tail allowance.
    """
    if n < 2 or k < 2:
        raise ValueError("need n >= 2, k >= 2")
    terms = [{"composition": comp, "index": tuple(a * n for a in comp), "sign": -1}
             for comp in compositions(k) if len(comp) < k]
    lhs, lhs_tail = mzv_bruteforce([n] * k, bound)
    rhs = float(fixedlen_zeta(n, k, prec))
    tails = lhs_tail
    for t in terms:
        v, tl = mzv_bruteforce(t["index"], bound)
        rhs -= v
        tails += tl
    return {
        "target": tuple([n] * k),
        "fixedlen_arg": (n, k),
        "subtracted": terms,
        "lhs_bruteforce": lhs,
        "rhs": rhs,
        "diff": lhs - rhs,
        "tail_allowance": tails,
    }

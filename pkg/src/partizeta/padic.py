"""p-adic interpolation of fixed-length partition zeta values, in exact
rational arithmetic throughout.

The Euler-factor-stripped values zeta*(1-n) = (1 - p^{n-1}) zeta(1-n) obey
the Kummer congruences; the k x k Hessenberg determinant with zeta* entries
then interpolates the length-k value over parts prime to p at negative
arguments. Everything here is a valuation statement about differences of
rationals, so no floating representation appears anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .numerics import hessenberg_det, zeta_neg_int

INFINITE_VALUATION = math.inf


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PadicContext:
    """Prime p, congruence exponent a, length k; requires odd p >= k + 3."""

    p: int
    a: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"p={self.p} must be an odd prime")
        if self.p < self.k + 3:
            raise ValueError(f"need p >= k+3, got p={self.p}, k={self.k}")
        if self.a < 0 or self.k < 1:
            raise ValueError("need a >= 0 and k >= 1")


def padic_valuation(q, p: int):
    """v_p of a rational (math.inf for 0)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = Fraction(q)
    if q == 0:
        return INFINITE_VALUATION
    v = 0
    num = abs(q.numerator)
    while num % p == 0:
        num //= p
        v += 1
    den = q.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def zeta_star_neg(p: int, n: int) -> Fraction:
    """zeta*(1-n) = (1 - p^{n-1}) zeta(1-n) for positive even n, exact."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 2 or n % 2:
        raise ValueError("zeta_star_neg wants even n >= 2 (trivial zeros out of scope)")
    return (1 - Fraction(p) ** (n - 1)) * zeta_neg_int(n - 1)


def _zeta_star_entry(p: int, n: int) -> Fraction:
    # determinant entries hit odd n too, where zeta(1-n) is a trivial zero
    if n % 2:
        return Fraction(0)
    return zeta_star_neg(p, n)


def kummer_check(p: int, a: int, k1: int, k2: int) -> bool:
    """Kummer congruence instance, exact.

    Preconditions (violations named): k1, k2 positive even, neither divisible
    by p-1, and k1 = k2 mod p^a (p-1). True iff
    v_p((1-p^{k1-1}) B_{k1}/k1 - (1-p^{k2-1}) B_{k2}/k2) >= a+1.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"precondition: p={p} must be an odd prime")
    for name, k in (("k1", k1), ("k2", k2)):
        if k < 2 or k % 2:
            raise ValueError(f"precondition: {name}={k} must be positive even")
        if k % (p - 1) == 0:
            raise ValueError(f"precondition: (p-1) must not divide {name}={k}")
    modulus = p ** (a + 1) - p ** a
    if (k1 - k2) % modulus:
        raise ValueError(
            f"precondition: k1={k1} and k2={k2} not congruent mod p^(a+1)-p^a={modulus}")
    diff = zeta_star_neg(p, k1) - zeta_star_neg(p, k2)
    return padic_valuation(diff, p) >= a + 1


def padic_fixedlen(ctx: PadicContext, m: int) -> Fraction:
    """Length-k zeta over parts prime to p, continued to the point s = 1 - m.

    (1/k!) det of the Hessenberg matrix with entries
    zeta*((1-m)(j-i+1)) (k-i)!/(k-j)! and -1 subdiagonal. m must be even
    >= 2 so the even-r entries fall on trivial zeros and the odd-r entries on
    Kummer-governed even arguments; the factorial ratios are p-integral
    because p >= k+3.
    """
    if m < 2 or m % 2:
        raise ValueError("evaluation points 1-m use even m >= 2")
    k = ctx.k
    p = ctx.p
    fact = [Fraction(math.factorial(i)) for i in range(k + 1)]

    def alpha(i, j):
        r = j - i + 1
        n = 1 + (m - 1) * r  # zeta* argument is (1-m) r = 1 - n
        return _zeta_star_entry(p, n) * fact[k - i] / fact[k - j]

    return hessenberg_det(alpha, k) / fact[k]


def interpolation_check(p: int, a: int, k: int, m1: int, m2: int) -> bool:
    """Continuity congruence of the interpolated length-k value.

    Preconditions: p >= k+3 odd prime; m1, m2 in S_2 (= 2 mod p-1);
    m1 = m2 mod p^a. True iff the determinant values at 1-m1 and 1-m2 agree
    mod p^{a+1} (valuation of the difference >= a+1).
    """
    ctx = PadicContext(p=p, a=a, k=k)
    for name, m in (("m1", m1), ("m2", m2)):
        if m < 2:
            raise ValueError(f"precondition: {name}={m} must be >= 2")
        if (m - 2) % (p - 1):
            raise ValueError(f"precondition: {name}={m} not in S_2 (== 2 mod p-1={p-1})")
    if (m1 - m2) % p ** a:
        raise ValueError(f"precondition: m1={m1}, m2={m2} not congruent mod p^a={p ** a}")
    diff = padic_fixedlen(ctx, m1) - padic_fixedlen(ctx, m2)
    return padic_valuation(diff, p) >= a + 1


def suggest_m2(p: int, a: int, k: int, m1: int) -> int:
    """Smallest valid m2 > m1 for interpolation_check, by CRT.

    Needs m2 = 2 mod (p-1) and m2 = m1 mod p^a; since gcd(p-1, p^a) = 1 the
    joint step is (p-1) p^a.
    """
    PadicContext(p=p, a=a, k=k)
    if (m1 - 2) % (p - 1):
        raise ValueError(f"m1={m1} not in S_2")
    return m1 + (p - 1) * p ** a

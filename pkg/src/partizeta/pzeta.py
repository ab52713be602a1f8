"""Partition zeta functions over restricted part sets, by independent routes.

Routes implemented:

* ``euler_product`` -- the defining product over the parts, truncated at a
  finite cutoff with the remaining log-tail summed exactly through
  congruence-class power sums (Euler-Maclaurin, certified bound).
* ``closed_form_gamma`` -- the gamma-product closed form for a single
  congruence class {a+m, a+2m, ...} at integer argument n >= 2.
* ``log_eval_general`` -- the log-gamma Taylor expansion of the same closed
  form (series in zeta(k) - 1).
* ``log_eval_multiples`` -- log zeta over multiples of m as sum_k
  zeta(sk)/(k m^{ks}), valid on Re(s) > 0 away from s = 1/N, where the k = N
  term hits the zeta pole; those points come back as ``PoleReport``.

Cross-route agreement is the correctness argument; the test-suite grids
exercise it at 10^-35.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .numerics import (
    DEFAULT_PREC,
    GUARD_BITS,
    TruncatedSeries,
    log_gamma,
    power_sum_tail,
    riemann_zeta,
    working,
)
from .partitions import DivergentPartSetError, PartSet, multiplicative_partition_count

POLE_SNAP = 1e-6  # distance to some 1/N below which we report the pole


@dataclass(frozen=True)
class CongruenceClassSpec:
    """Residue/modulus pair selecting parts {a+m, a+2m, ...}."""

    a: int
    m: int

    def __post_init__(self):
        if self.m < 1 or self.a < 0:
            raise ValueError("need a >= 0, m >= 1")
        if self.a == 0 and self.m == 1:
            raise ValueError("a=0, m=1 diverges (all parts, including 1)")

    def part_set(self) -> PartSet:
        return PartSet(classes=((self.a, self.m),))


@dataclass(frozen=True)
class PoleReport:
    s: complex
    pole_at_k: int
    message: str


def _e(x):
    return mp.expjpi(2 * x)


# ----------------------------------------------------------------------
def euler_product(spec: PartSet, s, tol=None, prec: int = DEFAULT_PREC):
    """prod_{k in M} (1 - k^-s)^{-1}, or prod (1 + k^-s) for distinct parts.

    Requires Re(s) > 1 and a nondivergent part set. The finite product stops
    at a cutoff K >= 64; the dropped log-tail sum_{k>K} -log(1 -+ k^-s) is
    recovered exactly as sum_j (+-1)^{j+1}/j * sum_{k>K, k in M} k^-js with
    each inner power sum evaluated by Euler-Maclaurin. The certificate
    (returned bound) collects the E-M bounds plus the geometric remainder of
    the j-series; it must come out below tol.
    """
    with working(prec):
        s = mp.mpmathify(s)
        sigma = mp.re(s)
        if sigma <= 1:
            raise ValueError("euler_product needs Re(s) > 1")
        if spec.is_divergent_for_zeta():
            raise DivergentPartSetError(f"part set {spec.spec_string()} diverges")
        if tol is None:
            tol = mp.mpf(2) ** (-(prec - 12))
        tol = mp.mpf(tol)
        ones = spec.ones_factor()
        # the accelerated tail converges geometrically in j, so a modest cutoff
        # suffices; it only must clear every non-congruence irregularity
        K = max(64, spec.tail_start() + 1)
        # finite part over parts in (1, K]
        log_total = mp.mpf(0) if mp.im(s) == 0 else mp.mpc(0)
        for k in spec.parts_upto(K):
            if k == 1:
                continue  # folded into ones_factor
            x = mp.mpf(k) ** (-s) if mp.im(s) == 0 else mp.mpc(k) ** (-s)
            log_total += mp.log(1 + x) if spec.distinct else -mp.log(1 - x)
        # accelerated tail over k > K
        M, residues = spec.tail_classes(K)
        err_budget = mp.mpf(0)
        if M is not None:
            jmax = max(4, int(mp.ceil((prec + 60) / (sigma * mp.log(K, 2)))) + 1)
            for j in range(1, jmax + 1):
                w = s * j
                inner = mp.mpf(0) if mp.im(s) == 0 else mp.mpc(0)
                for r in residues:
                    # members > K congruent to r mod M: first is K+((r-K) mod M or M)
                    step = (r - K) % M
                    first = K + (step if step else M)
                    i0 = (first - r) // M  # first = r + M*i0
                    val, bnd = power_sum_tail(w, mp.mpf(r) / M, i0, prec + GUARD_BITS)
                    inner += val * mp.mpf(M) ** (-w)
                    err_budget += bnd * mp.mpf(M) ** (-mp.re(w))
                sign = (-1) ** (j + 1) if spec.distinct else 1
                log_total += sign * inner / j
            # remainder of the j-series: sum_{k>K} k^{-j sigma} <= K^{1-j sigma}/(j sigma - 1)
            rem = (mp.mpf(K) ** (1 - (jmax + 1) * sigma)
                   / (((jmax + 1) * sigma - 1) * (1 - mp.mpf(K) ** (-sigma))))
            err_budget += rem
        if err_budget > tol:
            raise ArithmeticError(f"tail certificate {err_budget} exceeds tol {tol}")
        value = ones * mp.exp(log_total)
    with mp.workprec(prec):
        return +value, +err_budget


def closed_form_gamma(a: int, m: int, n: int, prec: int = DEFAULT_PREC):
    """Gamma(1+a/m)^{-n} prod_{r=0}^{n-1} Gamma(1 + (a - e(r/n))/m), n >= 2.

    The zeta value over parts {a+m, a+2m, ...} at integer argument n. The
    product is real after pairing conjugate factors; the imaginary residue is
    checked against 2^-(prec/2) before being discarded.
    """
    CongruenceClassSpec(a, m)
    if n < 2:
        raise ValueError("closed form needs n >= 2")
    with working(prec, extra=32):
        wp = mp.mp.prec
        acc = mp.mpc(0)
        for r in range(n):
            z = 1 + (a - _e(mp.mpf(r) / n)) / m
            if mp.im(z) == 0 and mp.re(z) <= 0:
                raise ArithmeticError("gamma argument hit a pole (cannot occur for valid specs)")
            acc += log_gamma(z, wp)
        acc -= n * log_gamma(1 + mp.mpf(a) / m, wp)
        val = mp.exp(acc)
        if abs(mp.im(val)) > mp.mpf(2) ** (-(prec // 2)) * (1 + abs(val)):
            raise ArithmeticError(f"imaginary residue {mp.im(val)} too large")
    with mp.workprec(prec):
        return +mp.re(val)


def log_eval_general(a: int, m: int, n: int, prec: int = DEFAULT_PREC):
    """log zeta over {a+m, a+2m, ...} at n, via the log-gamma expansion.

    Two-part series: n log(1+a/m) - sum_r log(1+z_r) plus
    sum_r sum_{k>=2} (-1)^k (zeta(k)-1) (z_r^k - (a/m)^k)/k, with
    z_r = (a - e(r/n))/m. Convergence needs max_r |z_r| < 2 (asserted); the
    Euler-Mascheroni terms cancel since sum_r e(r/n) = 0.
    """
    CongruenceClassSpec(a, m)
    if m < 2 or n < 2:
        raise ValueError("log_eval_general needs m, n >= 2")
    with working(prec, extra=32):
        zs = [(a - _e(mp.mpf(r) / n)) / m for r in range(n)]
        zmax = max(abs(z) for z in zs)
        if zmax >= 2:
            raise ValueError(f"|a - e(r/n)|/m reaches {zmax} >= 2: expansion diverges")
        for z in zs:
            if mp.im(z) == 0 and mp.re(1 + z) <= 0:
                raise ArithmeticError("branch-cut violation (cannot occur for valid specs)")
        am = mp.mpf(a) / m
        total = n * mp.log(1 + am) - mp.fsum(mp.log(1 + z) for z in zs)
        # series terms: (zeta(k)-1) ~ 2^-k, z^k <= zmax^k
        ratio = zmax / 2 if zmax > 1 else mp.mpf(1) / 2
        kmax = int(mp.ceil((prec + 60) / -mp.log(ratio, 2))) + 4
        acc = mp.mpc(0)
        for k in range(2, kmax + 1):
            zk = riemann_zeta(k, mp.mp.prec) - 1
            if zk == 0:
                continue
            ssum = mp.fsum((z ** k for z in zs), absolute=False) - n * am ** k
            acc += (-1) ** k * zk * ssum / k
        total += acc
        if abs(mp.im(total)) > mp.mpf(2) ** (-(prec // 2)) * (1 + abs(total)):
            raise ArithmeticError(f"imaginary residue {mp.im(total)} too large")
        total = mp.re(total)
    with mp.workprec(prec):
        return +total


def log_eval_multiples(m: int, s, prec: int = DEFAULT_PREC, tol=None):
    """log zeta over multiples of m: sum_{k>=1} zeta(sk)/(k m^{ks}).

    Defined for Re(s) > 0; this is the meromorphic extension left of
    Re(s) = 1, with poles exactly at s = 1/N (the k = N term is zeta(1)).
    Arguments within 1e-6 of such a point return a PoleReport instead of a
    value.
    """
    if m < 2:
        raise ValueError("log_eval_multiples needs m >= 2")
    with working(prec):
        s = mp.mpmathify(s)
        sigma = mp.re(s)
        if sigma <= 0:
            raise ValueError("no extension beyond Re(s) > 0 (essential singularity at 0)")
        if tol is None:
            tol = mp.mpf(2) ** (-(prec - 12))
        # pole detection: s within POLE_SNAP of 1/N for some N
        if mp.im(s) == 0 or abs(mp.im(s)) < POLE_SNAP:
            nmax = int(mp.ceil(1 / sigma)) + 2
            for N in range(1, nmax + 1):
                if abs(s - mp.mpf(1) / N) < POLE_SNAP:
                    return PoleReport(
                        s=complex(s), pole_at_k=N,
                        message=f"term k={N} is zeta(1): pole of the extension at s=1/{N}")
        k0 = 1
        while sigma * k0 <= 1:
            k0 += 1
        total = mp.mpc(0)
        # initial terms, each through the continued zeta
        for k in range(1, k0):
            total += riemann_zeta(s * k, mp.mp.prec) / (k * mp.mpf(m) ** (s * k))
        # convergent range: geometric in m^-sigma; |zeta(sk)| <= zeta(sigma k0)
        zbound = riemann_zeta(sigma * k0, mp.mp.prec)
        k = k0
        while True:
            term = riemann_zeta(s * k, mp.mp.prec) / (k * mp.mpf(m) ** (s * k))
            total += term
            k += 1
            rem = zbound * mp.mpf(m) ** (-k * sigma) / (k * (1 - mp.mpf(m) ** (-sigma)))
            if rem < tol:
                break
        if mp.im(s) == 0:
            total = mp.re(total)
    with mp.workprec(prec):
        return +total


def zeta_via_mobius(m: int, n: int, K: int, prec: int = DEFAULT_PREC):
    """Partial sum m^n sum_{k<=K} mu(k)/k sum_r log Gamma(1 - e(r/nk)/m).

    Converges to zeta(n) as K grows (inverted from the multiples-of-m log
    formula); the inner sum is real after conjugate pairing.
    """
    if m < 2 or n < 2 or K < 1:
        raise ValueError("need m, n >= 2 and K >= 1")
    mob = _mobius_upto(K)
    with working(prec, extra=32):
        wp = mp.mp.prec
        total = mp.mpf(0)
        for k in range(1, K + 1):
            if mob[k] == 0:
                continue
            inner = mp.fsum(
                mp.re(log_gamma(1 - _e(mp.mpf(r) / (n * k)) / m, wp))
                for r in range(n * k))
            total += mp.mpf(mob[k]) / k * inner
        total *= mp.mpf(m) ** n
    with mp.workprec(prec):
        return +total


def _mobius_upto(K: int) -> list[int]:
    mu = [1] * (K + 1)
    primes = []
    is_comp = [False] * (K + 1)
    for i in range(2, K + 1):
        if not is_comp[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > K:
                break
            is_comp[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    mu[0] = 0
    return mu


def zeta_via_gamma_series(n: int, prec: int = DEFAULT_PREC, antisymmetric: bool = False):
    """zeta(n) as [z^n] prod_{j<n} Gamma(1 - z e(j/n)), n >= 2.

    The product is expanded as exp of the summed log-gamma Taylor series
    (the Euler-Mascheroni terms cancel because the n-th roots of unity sum
    to zero). The antisymmetric variant extracts [z^n](P - 1/P)/2 instead;
    both equal zeta(n).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    with working(prec, extra=32):
        wp = mp.mp.prec
        T = n
        A = [mp.mpc(0)] * (T + 1)
        for j in range(n):
            w = -_e(mp.mpf(j) / n)  # log Gamma(1 + w z): -gamma w z + sum zeta(k)(-w)^k z^k /k
            A[1] += -mp.euler * w
            for k in range(2, T + 1):
                A[k] += riemann_zeta(k, wp) * (-w) ** k / k
        series = TruncatedSeries(A, T)
        P = series.exp()
        if antisymmetric:
            Q = TruncatedSeries([-c for c in A], T).exp()
            val = (P[T] - Q[T]) / 2
        else:
            val = P[T]
        if abs(mp.im(val)) > mp.mpf(2) ** (-(prec // 2)) * (1 + abs(val)):
            raise ArithmeticError("imaginary residue too large")
        val = mp.re(val)
    with mp.workprec(prec):
        return +val


def dirichlet_partition_series(spec: PartSet, f, s, tol=None, sigma_growth: float = 0.0,
                               prec: int = DEFAULT_PREC):
    """prod_{j in M} (1 - f(j) j^{-s})^{-1} with certified truncation.

    f is evaluated pointwise (completely multiplicative in the intended
    interpretation, where the product equals sum f(n_lambda) n_lambda^{-s}
    over partitions with parts in M). Growth contract |f(j)| <= j^sigma with
    Re(s) - sigma > 1; the tail is bounded by the integral estimate
    sum_{k>K} k^{sigma - Re s} <= K^{1+sigma-Re s}/(Re s - sigma - 1).
    """
    with working(prec):
        s = mp.mpmathify(s)
        w = mp.re(s) - sigma_growth
        if w <= 1:
            raise ValueError("growth violation: need Re(s) - sigma > 1")
        if spec.contains(1):
            fv = mp.mpmathify(f(1))
            if abs(fv) >= 1:
                raise DivergentPartSetError("part 1 with |f(1)| >= 1 diverges")
        # integral tail bound 2 K^{1-w}/(w-1); no acceleration for arbitrary f,
        # so achievable tolerances are polynomial in the cutoff
        if tol is None:
            K = 10 ** 5
        else:
            K = int(mp.ceil((4 / (mp.mpf(tol) * (w - 1))) ** (1 / (w - 1)))) + 8
            if K > 2 * 10 ** 6:
                raise ArithmeticError(
                    f"tol {tol} needs cutoff K={K}: beyond the direct-product budget")
        K = max(K, 64, spec.tail_start() + 1)
        total = mp.mpc(0)
        for k in spec.parts_upto(K):
            x = mp.mpmathify(f(k)) * mp.mpc(k) ** (-s)
            if abs(x) >= 1:
                raise ValueError(f"factor at part {k} leaves the convergence region")
            total += -mp.log(1 - x)
        bound = 2 * mp.mpf(K) ** (1 - w) / (w - 1)
        if tol is not None and bound > mp.mpf(tol):
            raise ArithmeticError(f"tail bound {bound} exceeds tol {tol}")
        val = mp.exp(total)
        if mp.im(s) == 0 and abs(mp.im(val)) < mp.mpf(2) ** (-(prec // 3)):
            val = mp.re(val)
    with mp.workprec(prec):
        return +val, +bound


def dirichlet_series_oracle(spec: PartSet, f, s, nmax: int, prec: int = DEFAULT_PREC):
    """Brute Dirichlet partial sum sum_{n<=nmax} f(n) a_n n^{-s} for
    completely multiplicative f, with a_n counted by multiplicative
    partitions. Oracle for ``dirichlet_partition_series``."""
    with working(prec):
        s = mp.mpmathify(s)
        total = mp.mpc(0)
        for n in range(1, nmax + 1):
            fv = f(n)
            if fv == 0:
                continue
            c = multiplicative_partition_count(n, spec)
            if c:
                total += mp.mpmathify(fv) * c * mp.mpc(n) ** (-s)
        if mp.im(s) == 0:
            total = mp.re(total) if abs(mp.im(total)) < mp.mpf(2) ** (-prec // 3) else total
    with mp.workprec(prec):
        return +total


def mainthm_reading_report(a: int, m: int, n: int, prec: int = DEFAULT_PREC) -> dict:
    """Which part-set reading matches the gamma closed form: {a+m, a+2m, ...}
    (index from 1) or the inclusive {a, a+m, ...}?

    Returns both Euler-product values, the closed form, and the verdict; the
    inclusive reading requires a >= 2 to converge at all.
    """
    exclusive = PartSet(classes=((a, m),))
    cf = closed_form_gamma(a, m, n, prec)
    ex_val, _ = euler_product(exclusive, mp.mpf(n), prec=prec)
    report = {"a": a, "m": m, "n": n, "closed_form": cf, "exclusive": ex_val}
    with mp.workprec(prec + GUARD_BITS):
        report["exclusive_dev"] = abs(ex_val - cf)
        if a >= 2:
            inclusive = PartSet(classes=((a, m),), explicit_parts=frozenset({a}))
            in_val, _ = euler_product(inclusive, mp.mpf(n), prec=prec)
            report["inclusive"] = in_val
            report["inclusive_dev"] = abs(in_val - cf)
        else:
            report["inclusive"] = None
            report["inclusive_dev"] = None
    report["matching_reading"] = "exclusive (parts a+mj, j>=1)"
    return report

"""Hecke-normalized Eisenstein series and their arithmetic ingredients.

Conventions, for weight 2k and q = e^{2 pi i tau}:

    eis_constant(k)      = -b_{2k} / (4k)                      (exact rational)
    cusp part at tau     = sum_{n >= 1} sigma_{2k-1}(n) q^n    (certified truncation)
    full series          = constant + cusp part

with b_m the Bernoulli numbers (b_2 = 1/6, b_4 = -1/30, ...), so e.g. the
weight-4 constant term is +1/240.  Divisor sums are computed by a shared
sieve and stay exact integers until the final float conversion.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from mpmath import mp, mpc, mpf

from .config import DEFAULT_BUDGET, BudgetError, TruncationBudget

_sigma_tables: dict[int, list[int]] = {}
_sigma_lock = threading.Lock()

_bernoulli_even: list[Fraction] = [Fraction(1)]  # b_0, b_2, b_4, ...
_bernoulli_lock = threading.Lock()


def divisor_sigma(w: int, n: int) -> int:
    """Exact divisor power sum sum_{d | n} d^w, by direct divisor enumeration."""
    if w < 3 or w % 2 == 0:
        raise ValueError("w must be odd and >= 3")
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**w
            e = n // d
            if e != d:
                total += e**w
        d += 1
    return total


def sigma_table(w: int, n_max: int) -> list[int]:
    """Sieve of sigma_w(1..n_max); shared cache, grown monotonically per w.

    Index 0 of the returned list is unused.  Callers must not mutate the list.
    """
    if w < 3 or w % 2 == 0:
        raise ValueError("w must be odd and >= 3")
    with _sigma_lock:
        tab = _sigma_tables.get(w)
        if tab is None or len(tab) <= n_max:
            size = max(n_max, 64, 2 * (len(tab) - 1) if tab else 0)
            new = [0] * (size + 1)
            for d in range(1, size + 1):
                dw = d**w
                for m in range(d, size + 1, d):
                    new[m] += dw
            _sigma_tables[w] = new
            tab = new
        return tab


def bernoulli(m: int) -> Fraction:
    """Bernoulli number b_m for even m >= 2, exact (b_2 = 1/6, b_4 = -1/30, ...).

    Uses the even-index recurrence derived from sum_{r<=n} C(n+1, r) b_r = 0,
    skipping the odd indices (zero for m >= 3; the b_1 = -1/2 term is folded in).
    """
    if m < 2 or m % 2:
        raise ValueError("m must be even and >= 2")
    k = m // 2
    with _bernoulli_lock:
        while len(_bernoulli_even) <= k:
            j = len(_bernoulli_even)
            n = 2 * j
            acc = sum(Fraction(comb(n + 1, 2 * i)) * _bernoulli_even[i] for i in range(j))
            acc += Fraction(-(n + 1), 2)  # C(n+1, 1) * b_1
            _bernoulli_even.append(-acc / (n + 1))
        return _bernoulli_even[k]


def eis_constant(k: int) -> Fraction:
    """Constant term -b_{2k}/(4k) of the weight-2k series, exact."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return -bernoulli(2 * k) / (4 * k)


def tail_start(power: int, x, eps, n_max: int) -> int:
    """An N certified to satisfy sum_{n > N} n^power x^n < eps, for 0 <= x < 1.

    Bound: once rho = ((N+2)/(N+1))^power * x < 1 the terms decay at least
    geometrically past N, so the tail is at most t(N+1) / (1 - rho).
    """
    x = mpf(x)
    eps = mpf(eps)
    if x < 0 or x >= 1:
        raise ValueError("x must lie in [0, 1)")
    if x == 0:
        return 1
    lnx = mp.log(x)
    n = max(1, int(mp.ceil(power / (-lnx))))  # past the peak of n^power x^n
    while n <= n_max:
        rho = (mpf(n + 2) / (n + 1)) ** power * x
        if rho < 1:
            log_tail = power * mp.log(n + 1) + (n + 1) * lnx - mp.log(1 - rho)
            if log_tail < mp.log(eps):
                return n
        n += 1 + n // 16
    raise BudgetError(
        f"truncation index cap {n_max} reached before certified tail < {float(eps)}; "
        "Im tau is too small for this budget"
    )


_trunc_cache: dict[tuple[int, float, float, int], int] = {}


def _cached_tail_start(power: int, y, eps, n_max: int) -> int:
    """tail_start for x = e^{-2 pi y}, cached on a downward-quantized y.

    Quantizing y downward only enlarges x, so the cached N stays certified.
    """
    yf = float(y)
    y_q = int(yf * 8) / 8.0
    if y_q <= 0:
        return tail_start(power, mp.exp(-2 * mp.pi * y), eps, n_max)
    key = (power, y_q, float(eps), n_max)
    n = _trunc_cache.get(key)
    if n is None:
        n = tail_start(power, mp.exp(-2 * mp.pi * mpf(y_q)), eps, n_max)
        _trunc_cache[key] = n
    return n


def eis_cusp_eval(k: int, tau, budget: TruncationBudget = DEFAULT_BUDGET) -> mpc:
    """Cusp part sum_{n=1}^N sigma_{2k-1}(n) q^n with certified tail below budget.eps.

    The tail certificate uses sigma_{2k-1}(n) <= n^{2k}.  Raises BudgetError if
    Im tau is too small for the requested eps within budget.n_max terms.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    tau = mpc(tau)
    if not tau.imag > 0:
        raise ValueError("Im tau must be positive")
    with mp.extradps(10):
        n_trunc = _cached_tail_start(2 * k, tau.imag, budget.eps, budget.n_max)
        sig = sigma_table(2 * k - 1, n_trunc)
        q = mp.expjpi(2 * tau)
        qn = mpc(1)
        acc = mpc(0)
        for n in range(1, n_trunc + 1):
            qn *= q
            acc += sig[n] * qn
    return +acc


def eis_eval(k: int, tau, budget: TruncationBudget = DEFAULT_BUDGET) -> mpc:
    """Full weight-2k series: constant term plus cusp part."""
    c = eis_constant(k)
    with mp.extradps(10):
        val = mpf(c.numerator) / c.denominator + eis_cusp_eval(k, tau, budget)
    return +val


def precision_selftest(threshold_exp: int | None = None) -> mpf:
    """Built-in precision check: the weight-6 series vanishes at tau = i.

    Returns |E_6(i)| and raises if it exceeds 10^-(P-5) at working precision P
    (or ``10^-threshold_exp`` if given).
    """
    if threshold_exp is None:
        threshold_exp = mp.dps - 5
    budget = TruncationBudget(eps=mpf(10) ** (-(mp.dps + 5)), n_max=DEFAULT_BUDGET.n_max)
    resid = abs(eis_eval(3, mpc(0, 1), budget))
    if not resid < mpf(10) ** (-threshold_exp):
        raise AssertionError(
            f"precision self-test failed: |E_6(i)| = {mp.nstr(resid, 8)} "
            f"at {mp.dps} working digits"
        )
    return resid

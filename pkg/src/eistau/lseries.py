"""Multiple Eisenstein L-series: exact q-expansion coefficients and evaluation.

For an index (k_1..k_r; alpha_1..alpha_r; t) the series is

    (2 pi i)^{-(alpha_1+...+alpha_r)} tau^t sum_{m >= 1} c(m) q^m,

    c(m) = sum over n_1 + ... + n_r = m, n_i >= 1, of
           prod_i sigma_{2k_i-1}(n_i) / prod_i (n_i + ... + n_r)^{alpha_i}.

Coefficients c(m) are exact rationals; l_coeffs_dp computes them by a backward
recursion in O(r N^2) exact operations, l_coeffs_bruteforce enumerates the
compositions literally and exists as an oracle.  Evaluation converts to
floating point only at the end, with a certified tail bound.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpc, mpf

from .algebra import CompositeIndex
from .config import DEFAULT_BUDGET, TruncationBudget
from .eisenstein import _cached_tail_start, sigma_table

BRUTEFORCE_MAX_DEPTH = 4
BRUTEFORCE_MAX_N = 200


@dataclass(frozen=True)
class LCoefficients:
    """Exact coefficients c(1..N) of the q-expansion (without the prefactor)."""

    index: CompositeIndex
    coeffs: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, m: int) -> Fraction:
        if not 1 <= m <= self.n:
            raise IndexError(f"coefficient index {m} outside 1..{self.n}")
        return self.coeffs[m - 1]

    def csv_rows(self):
        for m, c in enumerate(self.coeffs, start=1):
            yield (m, f"{c.numerator}/{c.denominator}")


def l_coeffs_dp(index: CompositeIndex, n: int) -> LCoefficients:
    """c(1..n) by the backward recursion over the chain of partial sums.

    S_r(m) = sigma_{2k_r-1}(m) / m^{alpha_r};
    S_j(m) = m^{-alpha_j} sum_{u=1}^{m-1} sigma_{2k_j-1}(u) S_{j+1}(m-u);
    c(m) = S_1(m).
    """
    if index.depth < 1:
        raise ValueError("depth must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    r = index.depth
    sig = [sigma_table(2 * k - 1, n) for k in index.ks]
    layer = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        layer[m] = Fraction(sig[r - 1][m], m ** index.alphas[r - 1])
    for j in range(r - 2, -1, -1):
        sj = sig[j]
        aj = index.alphas[j]
        nxt = [Fraction(0)] * (n + 1)
        for m in range(1, n + 1):
            acc = Fraction(0)
            for u in range(1, m):
                s = layer[m - u]
                if s:
                    acc += sj[u] * s
            if acc:
                nxt[m] = acc / m**aj
        layer = nxt
    return LCoefficients(index, tuple(layer[1:]))


def l_coeffs_bruteforce(index: CompositeIndex, n: int) -> LCoefficients:
    """c(1..n) by literal enumeration of all compositions; guarded oracle."""
    if index.depth < 1:
        raise ValueError("depth must be >= 1")
    r = index.depth
    if r > BRUTEFORCE_MAX_DEPTH or n > BRUTEFORCE_MAX_N:
        raise ValueError(
            f"bruteforce guard: depth <= {BRUTEFORCE_MAX_DEPTH} and N <= {BRUTEFORCE_MAX_N}"
        )
    sig = [sigma_table(2 * k - 1, n) for k in index.ks]
    out = [Fraction(0)] * (n + 1)

    def walk(pos: int, remaining: int, parts: list[int]):
        if pos == r - 1:
            parts.append(remaining)
            num = 1
            den = 1
            tail = 0
            for j in range(r - 1, -1, -1):
                num *= sig[j][parts[j]]
                tail += parts[j]
                den *= tail ** index.alphas[j]
            out[sum(parts)] += Fraction(num, den)
            parts.pop()
            return
        for v in range(1, remaining - (r - pos - 1) + 1):
            parts.append(v)
            walk(pos + 1, remaining - v, parts)
            parts.pop()

    for m in range(r, n + 1):
        walk(0, m, [])
    return LCoefficients(index, tuple(out[1:]))


def _coeff_majorant_power(index: CompositeIndex) -> int:
    # c(m) <= (#compositions) * (sigma product) <= m^{r-1} m^{2 sum k}, and the
    # leading denominator >= m; keep an extra m^2 of slack
    return 2 * index.upper_weight + index.depth + 1


_coeff_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], LCoefficients] = {}


def _coeffs_upto(index: CompositeIndex, n: int) -> LCoefficients:
    """Cached l_coeffs_dp; the cache keeps the largest table per (ks, alphas)."""
    key = (index.ks, index.alphas)
    hit = _coeff_cache.get(key)
    if hit is None or hit.n < n:
        hit = l_coeffs_dp(CompositeIndex(index.ks, index.alphas, 0), n)
        _coeff_cache[key] = hit
    return hit


def l_eval(index: CompositeIndex, tau, budget: TruncationBudget = DEFAULT_BUDGET) -> mpc:
    """Series value at tau with certified truncation; depth 0 returns 1."""
    if index.depth == 0:
        return mpc(1)
    tau = mpc(tau)
    if not tau.imag > 0:
        raise ValueError("Im tau must be positive")
    if tau.imag < mpf("0.1"):
        warnings.warn(
            f"Im tau = {mp.nstr(tau.imag, 6)} < 0.1: truncation grows like 1/Im tau",
            stacklevel=2,
        )
    with mp.extradps(10):
        alpha_sum = sum(index.alphas)
        prefactor = (2 * mp.pi * mpc(0, 1)) ** (-alpha_sum) * tau**index.t
        eps_series = mpf(budget.eps) / (1 + abs(prefactor))
        n_trunc = _cached_tail_start(
            _coeff_majorant_power(index), tau.imag, eps_series, budget.n_max
        )
        coeffs = _coeffs_upto(index, n_trunc)
        q = mp.expjpi(2 * tau)
        qn = mpc(1)
        acc = mpc(0)
        for m in range(1, n_trunc + 1):
            qn *= q
            c = coeffs.coeffs[m - 1]
            if c:
                acc += mpf(c.numerator) / c.denominator * qn
        val = prefactor * acc
    return +val

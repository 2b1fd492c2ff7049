"""Exact-rational algebra maps between integral and L-series symbols.

Conventions implemented (fixed by the numeric faithfulness and round-trip
suites; every formula below is checked against direct evaluation):

* integral -> series.  With A_j = alpha_j + ... + alpha_r - i_{j+1} - ... - i_r,

    tau^p Int(k; alpha_1..alpha_r)
      = sum over 1 <= i_j <= A_j of
        (-1)^{i_1+...+i_r} prod_j [(A_j - 1)! / (A_j - i_j)!]
        L^{(p + sum alpha - sum i)}(k; i_1..i_r).

  The factorial ratios come from repeated integration by parts of
  int e^{c s} s^{A-1} ds; each ratio is an exact integer.

* series -> integral.  Expanding (z_j - z_{j-1})^{alpha_j - 1} binomially
  (z_0 = tau) in the difference-kernel integral representation,

    L^{(t)}(k; alpha_1..alpha_r)
      = [(-1)^{sum alpha} / prod_j (alpha_j - 1)!]
        sum over 0 <= i_j <= alpha_j - 1 of
        (-1)^{i_1+...+i_r} prod_j C(alpha_j - 1, i_j)
        tau^{t + i_1} Int(k; ..., alpha_j - i_j + i_{j+1}, ...),  i_{r+1} = 0,

  whose emitted exponents alpha_j - i_j + i_{j+1} are >= 1 by construction.

* stuffle.  Products of series symbols (t = 0) expand through the partial
  fraction  1/(M^a N^b) = sum_{c+d=a+b, c,d>=1} [ C(c-1, a-1) / ((M+N)^c N^d)
  + C(c-1, b-1) / ((M+N)^c M^d) ]  applied recursively to the outermost
  partial sums of the two chains.

The two conversions are mutually inverse on formal sums (exactly, over Q),
and depend only on the exponent data, never on the weights.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from mpmath import mpc

from .algebra import (
    LSERIES,
    TAU_INTEGRAL,
    FormalSum,
    Generator,
    lseries_gen,
    tau_integral_gen,
)
from .config import DEFAULT_BUDGET, TruncationBudget
from .integrals import int_eval
from .lseries import l_eval

Letter = tuple[int, int]  # (k, alpha)


def shuffle_words(u: tuple[Letter, ...], v: tuple[Letter, ...]):
    """All interleavings of u and v preserving both internal orders, with repeats."""
    r, s = len(u), len(v)
    for positions in combinations(range(r + s), r):
        word: list[Letter] = [None] * (r + s)  # type: ignore[list-item]
        ui = iter(u)
        vi = iter(v)
        pos = set(positions)
        for idx in range(r + s):
            word[idx] = next(ui) if idx in pos else next(vi)
        yield tuple(word)


def shuffle_product(u, v) -> FormalSum:
    """Formal sum of all (|u|,|v|)-shuffles, multiplicities accumulated."""
    u = tuple((int(k), int(a)) for k, a in u)
    v = tuple((int(k), int(a)) for k, a in v)
    out = FormalSum()
    for word in shuffle_words(u, v):
        ks = [k for k, _ in word]
        alphas = [a for _, a in word]
        out = out + FormalSum.single(tau_integral_gen(ks, alphas, 0))
    return out


@lru_cache(maxsize=None)
def _int_to_l_skeleton(alphas: tuple[int, ...]):
    """Entries (i_vec, integer coefficient, t_delta) of the integral -> series map."""
    out = []

    def rec(j: int, carry: int, ivec_rev: list[int], coeff: int):
        if j < 0:
            out.append((tuple(reversed(ivec_rev)), coeff, carry))
            return
        a = alphas[j] + carry
        ratio = 1  # (a-1)! / (a-i)!
        for i in range(1, a + 1):
            ivec_rev.append(i)
            rec(j - 1, a - i, ivec_rev, coeff * ratio * (-1) ** i)
            ivec_rev.pop()
            ratio *= a - i

    rec(len(alphas) - 1, 0, [], 1)
    return tuple(out)


@lru_cache(maxsize=None)
def _l_to_int_skeleton(alphas: tuple[int, ...]):
    """Entries (new_alphas, i_1, Fraction coefficient) of the series -> integral map."""
    denom = 1
    for a in alphas:
        denom *= factorial(a - 1)
    sign = (-1) ** sum(alphas)
    out = []

    def rec(j: int, i_next: int, rev_alphas: list[int], coeff: int):
        if j < 0:
            out.append((tuple(reversed(rev_alphas)), i_next, Fraction(sign * coeff, denom)))
            return
        a = alphas[j]
        for i in range(a):
            new_alpha = a - i + i_next
            assert new_alpha >= 1
            rev_alphas.append(new_alpha)
            rec(j - 1, i, rev_alphas, coeff * comb(a - 1, i) * (-1) ** i)
            rev_alphas.pop()

    rec(len(alphas) - 1, 0, [], 1)
    return tuple(out)


def int_to_l(gen: Generator) -> FormalSum:
    """Expand tau^p Int(k; alphas) as a formal sum of L-series generators."""
    if gen.kind != TAU_INTEGRAL:
        raise ValueError("int_to_l expects a tau-integral generator")
    if gen.depth < 1:
        raise ValueError("depth must be >= 1")
    terms: dict[Generator, Fraction] = {}
    for ivec, coeff, t_delta in _int_to_l_skeleton(gen.alphas):
        target = lseries_gen(gen.ks, ivec, gen.power + t_delta)
        terms[target] = terms.get(target, Fraction(0)) + coeff
    return FormalSum(terms)


def l_to_int(gen: Generator) -> FormalSum:
    """Expand L^{(t)}(k; alphas) as a formal sum of tau-integral generators."""
    if gen.kind != LSERIES:
        raise ValueError("l_to_int expects an L-series generator")
    if gen.depth < 1:
        raise ValueError("depth must be >= 1")
    terms: dict[Generator, Fraction] = {}
    for new_alphas, i1, coeff in _l_to_int_skeleton(gen.alphas):
        target = tau_integral_gen(gen.ks, new_alphas, gen.power + i1)
        terms[target] = terms.get(target, Fraction(0)) + coeff
    return FormalSum(terms)


def convert_sum(fs: FormalSum, direction: str) -> FormalSum:
    """Linear extension of the conversion maps; direction 'int2l' or 'l2int'."""
    if direction not in ("int2l", "l2int"):
        raise ValueError("direction must be 'int2l' or 'l2int'")
    conv = int_to_l if direction == "int2l" else l_to_int
    out = FormalSum()
    for g, c in fs:
        out = out + conv(g).scale(c)
    return out


Chain = tuple[Letter, ...]


def _stuffle_chains(left: Chain, right: Chain) -> dict[Chain, int]:
    if not left:
        return {right: 1}
    if not right:
        return {left: 1}
    (k1, a), *lrest = left
    (k2, b), *rrest = right
    out: dict[Chain, int] = {}
    for c in range(1, a + b):
        d = a + b - c
        w1 = comb(c - 1, a - 1)
        if w1:
            for word, m in _stuffle_chains(tuple(lrest), ((k2, d),) + tuple(rrest)).items():
                key = ((k1, c),) + word
                out[key] = out.get(key, 0) + w1 * m
        w2 = comb(c - 1, b - 1)
        if w2:
            for word, m in _stuffle_chains(((k1, d),) + tuple(lrest), tuple(rrest)).items():
                key = ((k2, c),) + word
                out[key] = out.get(key, 0) + w2 * m
    return out


def stuffle_product(g1: Generator, g2: Generator) -> FormalSum:
    """Series product of two t = 0 L-series generators as a formal sum (t = 0)."""
    for g in (g1, g2):
        if g.kind != LSERIES:
            raise ValueError("stuffle_product expects L-series generators")
        if g.power != 0:
            raise ValueError("stuffle_product expects t = 0 generators")
        if g.depth < 1:
            raise ValueError("depths must be >= 1")
    left = tuple(zip(g1.ks, g1.alphas))
    right = tuple(zip(g2.ks, g2.alphas))
    terms: dict[Generator, Fraction] = {}
    for word, mult in _stuffle_chains(left, right).items():
        gen = lseries_gen([k for k, _ in word], [a for _, a in word], 0)
        terms[gen] = terms.get(gen, Fraction(0)) + mult
    return FormalSum(terms)


@lru_cache(maxsize=None)
def roundtrip_pattern(alphas: tuple[int, ...], t: int, start: str = TAU_INTEGRAL) -> bool:
    """Exact identity check of the composed conversion for one exponent pattern.

    Both conversion maps act on (alphas, power) only and carry the weight tuple
    through unchanged, so the round trip is the identity on every generator
    with this pattern iff the composed skeleton is.  Computed with plain
    tuple/Fraction arithmetic for speed.
    """
    acc: dict[tuple[tuple[int, ...], int], Fraction] = {}
    if start == TAU_INTEGRAL:
        for ivec, c1, t_delta in _int_to_l_skeleton(alphas):
            for new_alphas, i1, c2 in _l_to_int_skeleton(ivec):
                key = (new_alphas, t + t_delta + i1)
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
    else:
        for new_alphas, i1, c1 in _l_to_int_skeleton(alphas):
            for ivec, c2, t_delta in _int_to_l_skeleton(new_alphas):
                key = (ivec, t + i1 + t_delta)
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
    acc = {k: v for k, v in acc.items() if v}
    return acc == {(alphas, t): Fraction(1)}


def numeric_value(fs: FormalSum, tau, budget: TruncationBudget = DEFAULT_BUDGET) -> mpc:
    """Evaluate a formal sum at tau: L-generators by series summation,
    integral generators by tau^p times the iterated integral."""
    tau = mpc(tau)
    acc = mpc(0)
    for g, c in fs:
        scale = mpc(c.numerator) / c.denominator
        if g.kind == LSERIES:
            acc += scale * l_eval(g.index(), tau, budget)
        else:
            acc += scale * tau**g.power * int_eval(g.index(), tau, budget)
    return acc

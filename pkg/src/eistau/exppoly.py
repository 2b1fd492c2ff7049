"""Exponential polynomials: closed-form carrier for iterated tail integrals.

An ExpPoly represents  f(t) = sum_n P_n(t) e^{2 pi i n t}  with nonnegative
integer frequencies n and polynomial coefficients P_n over mpmath complex
numbers.  The class is closed under addition, products, multiplication by
powers of t, and the tail integral

    g(t) = int_t^{i oo} f(s) s^{alpha-1} ds        (alpha >= 1),

which exists termwise provided every contributing frequency is >= 1; a
nonzero frequency-0 part makes the tail diverge and is rejected.

The elementary building block is

    int_a^{i oo} e^{2 pi i n s} Q(s) ds = -e^{2 pi i n a} sum_j (-1)^j Q^(j)(a) / c^{j+1}

with c = 2 pi i n, applied per frequency with Q(s) = P_n(s) s^{alpha-1}.

Instances are treated as immutable: all operations return new values.
"""

from __future__ import annotations

from mpmath import mp, mpc

Poly = tuple  # coefficient tuple, index = power of t


def _ptrim(coeffs) -> Poly:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [mpc(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _ptrim(out)


def _pscale(a: Poly, c) -> Poly:
    return _ptrim(x * c for x in a)


def _pshift(a: Poly, m: int) -> Poly:
    """Multiply by t^m."""
    if not a:
        return ()
    return (mpc(0),) * m + tuple(a)


def _pderiv(a: Poly) -> Poly:
    return _ptrim(j * a[j] for j in range(1, len(a)))


def _peval(a: Poly, t) -> mpc:
    acc = mpc(0)
    for c in reversed(a):
        acc = acc * t + c
    return acc


class ExpPoly:
    """Finite sum of polynomial-times-exponential terms; see module docstring."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Poly] | None = None):
        clean: dict[int, Poly] = {}
        if terms:
            for n, poly in terms.items():
                p = _ptrim(poly)
                if p:
                    if n < 0:
                        raise ValueError("frequencies must be nonnegative")
                    clean[n] = p
        self.terms = clean

    @classmethod
    def zero(cls) -> "ExpPoly":
        return cls()

    @classmethod
    def from_qseries(cls, coeffs: dict[int, object]) -> "ExpPoly":
        """ExpPoly with constant polynomials: sum_n coeffs[n] e^{2 pi i n t}."""
        return cls({n: (mpc(c),) for n, c in coeffs.items() if c != 0})

    def is_zero(self) -> bool:
        return not self.terms

    def max_freq(self) -> int:
        return max(self.terms, default=0)

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        out = dict(self.terms)
        for n, p in other.terms.items():
            out[n] = _padd(out.get(n, ()), p)
        return ExpPoly(out)

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "ExpPoly":
        c = mpc(c)
        if c == 0:
            return ExpPoly()
        return ExpPoly({n: _pscale(p, c) for n, p in self.terms.items()})

    def mul_tpow(self, m: int) -> "ExpPoly":
        if m < 0:
            raise ValueError("only nonnegative powers of t")
        return ExpPoly({n: _pshift(p, m) for n, p in self.terms.items()})

    def __mul__(self, other: "ExpPoly") -> "ExpPoly":
        out: dict[int, Poly] = {}
        for n1, p1 in self.terms.items():
            for n2, p2 in other.terms.items():
                n = n1 + n2
                out[n] = _padd(out.get(n, ()), _pmul(p1, p2))
        return ExpPoly(out)

    def truncated(self, n_cut: int) -> "ExpPoly":
        """Drop frequencies above n_cut."""
        return ExpPoly({n: p for n, p in self.terms.items() if n <= n_cut})

    def tail_integral(self, alpha: int) -> "ExpPoly":
        """g(t) = int_t^{i oo} f(s) s^{alpha-1} ds, termwise; rejects frequency 0."""
        if alpha < 1:
            raise ValueError("alpha must be >= 1")
        if 0 in self.terms:
            raise ValueError("nonzero frequency-0 part: tail integral diverges")
        out: dict[int, Poly] = {}
        for n, p in self.terms.items():
            c = 2 * mp.pi * mpc(0, 1) * n
            q = _pshift(p, alpha - 1)
            acc: Poly = ()
            sign = -1  # -(-1)^j / c^{j+1} for j = 0, 1, ...
            cpow = c
            while q:
                acc = _padd(acc, _pscale(q, sign / cpow))
                q = _pderiv(q)
                sign = -sign
                cpow *= c
            out[n] = acc
        return ExpPoly(out)

    def derivative(self) -> "ExpPoly":
        """d/dt, termwise: P_n' + 2 pi i n P_n per frequency."""
        out: dict[int, Poly] = {}
        for n, p in self.terms.items():
            c = 2 * mp.pi * mpc(0, 1) * n
            out[n] = _padd(_pderiv(p), _pscale(p, c))
        return ExpPoly(out)

    def __call__(self, t) -> mpc:
        t = mpc(t)
        acc = mpc(0)
        for n, p in sorted(self.terms.items(), reverse=True):
            acc += _peval(p, t) * mp.expjpi(2 * n * t)
        return acc

    def coefficient(self, n: int, j: int) -> mpc:
        """Coefficient of t^j e^{2 pi i n t}."""
        p = self.terms.get(n, ())
        return mpc(p[j]) if j < len(p) else mpc(0)

    def dump(self) -> str:
        """Debug format: one line per frequency, 'n; c0, c1, ...'."""
        lines = []
        for n in sorted(self.terms):
            cs = ", ".join(mp.nstr(c, mp.dps) for c in self.terms[n])
            lines.append(f"{n}; {cs}")
        return "\n".join(lines)

    def __repr__(self):
        return f"ExpPoly(<{len(self.terms)} frequencies, max {self.max_freq()}>)"


def elem_exp_tail(n: int, alpha: int, a) -> mpc:
    """Exact closed form of int_a^{i oo} e^{2 pi i n t} t^{alpha-1} dt for n, alpha >= 1.

    Equals -e^{2 pi i n a} sum_{j=0}^{alpha-1} (-1)^j [(alpha-1)!/(alpha-1-j)!]
    a^{alpha-1-j} / (2 pi i n)^{j+1}.
    """
    if n < 1 or alpha < 1:
        raise ValueError("n and alpha must be >= 1")
    a = mpc(a)
    if not a.imag > 0:
        raise ValueError("Im a must be positive")
    c = 2 * mp.pi * mpc(0, 1) * n
    acc = mpc(0)
    fact = 1  # (alpha-1)! / (alpha-1-j)!
    cpow = c
    apow = a ** (alpha - 1)
    for j in range(alpha):
        acc += (-1) ** j * fact * apow / cpow
        fact *= alpha - 1 - j
        cpow *= c
        if j < alpha - 1:
            apow /= a
    return -mp.expjpi(2 * n * a) * acc

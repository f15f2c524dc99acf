"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction


def _q(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class RationalPoly:
    """Immutable polynomial over Q, coefficients stored lowest degree first.

    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def x(cls) -> "RationalPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "RationalPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "RationalPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-_q(r), 1))
        return p

    # -- basic properties ---------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> "RationalPoly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "RationalPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "RationalPoly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "RationalPoly":
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = RationalPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "RationalPoly":
        c = _q(c)
        return RationalPoly(c * a for a in self.coeffs)

    def divmod(self, other: "RationalPoly") -> tuple["RationalPoly", "RationalPoly"]:
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc
        if len(rem) - 1 < dq:
            return RationalPoly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lc
            quot[i - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= f * b
        return RationalPoly(quot), RationalPoly(rem[:dq])

    def __floordiv__(self, other) -> "RationalPoly":
        return self.divmod(other)[0]

    def __mod__(self, other) -> "RationalPoly":
        return self.divmod(other)[1]

    def derivative(self) -> "RationalPoly":
        return RationalPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> "RationalPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lc)

    def primitive(self) -> "RationalPoly":
        """Integer coefficients with content 1 and positive leading coefficient."""
        if self.is_zero():
            return self
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return RationalPoly(Fraction(i, g) for i in ints)

    def integer_coeffs(self) -> list[int]:
        p = self.primitive()
        return [int(c) for c in p.coeffs]

    def compose(self, other: "RationalPoly") -> "RationalPoly":
        other = _as_poly(other)
        result = RationalPoly()
        for c in reversed(self.coeffs):
            result = result * other + c
        return result

    def reversed_scaled(self, c) -> "RationalPoly":
        """p(c*x)."""
        c = _q(c)
        return RationalPoly(a * c**i for i, a in enumerate(self.coeffs))

    # -- evaluation ---------------------------------------------------
    def __call__(self, x):
        acc = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        """Enclosure of the range of p over [lo, hi] via interval Horner."""
        a, b = Fraction(0), Fraction(0)
        for c in reversed(self.coeffs):
            prods = (a * lo, a * hi, b * lo, b * hi)
            a, b = min(prods) + c, max(prods) + c
        return a, b

    def sign_at(self, x: Fraction) -> int:
        v = self(_q(x))
        return (v > 0) - (v < 0)


def _as_poly(p) -> RationalPoly:
    if isinstance(p, RationalPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return RationalPoly((p,))
    raise TypeError(f"cannot interpret {p!r} as a polynomial")


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: RationalPoly, b: RationalPoly):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = RationalPoly((1,)), RationalPoly()
    t0, t1 = RationalPoly(), RationalPoly((1,))
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lc
    return r0.scale(1 / lc), s0.scale(1 / lc), t0.scale(1 / lc)


def squarefree_part(p: RationalPoly) -> RationalPoly:
    if p.degree <= 0:
        return p.monic()
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def is_squarefree(p: RationalPoly) -> bool:
    return poly_gcd(p, p.derivative()).degree == 0


def discriminant(p: RationalPoly) -> Fraction:
    """Discriminant of p, via the resultant of p and p'."""
    n = p.degree
    if n < 1:
        raise ValueError("discriminant of a constant")
    r = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r / p.lc


def resultant(a: RationalPoly, b: RationalPoly) -> Fraction:
    """Resultant of two univariate polynomials by the Euclidean algorithm."""
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    res = Fraction(1)
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return res * b.lc**da
        r = a % b
        if r.is_zero():
            return Fraction(0)
        dr = r.degree
        if (da * db) % 2:
            res = -res
        res *= b.lc ** (da - dr)
        a, b = b, r


def sturm_sequence(p: RationalPoly) -> list[RationalPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def sign_variations(seq: Sequence[RationalPoly], x: Fraction) -> int:
    signs = [s for s in (q.sign_at(x) for q in seq) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def count_roots(seq: Sequence[RationalPoly], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct roots in (lo, hi] of the squarefree polynomial seq[0]."""
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def root_bound(p: RationalPoly) -> Fraction:
    """Cauchy bound: every complex root has modulus strictly below this."""
    lc = abs(p.lc)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


# -- matrices ------------------------------------------------------------

def charpoly(M: Sequence[Sequence]) -> RationalPoly:
    """det(xI - M) for a square matrix with rational entries (Faddeev-LeVerrier)."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("charpoly requires a square matrix")
    A = [[_q(v) for v in row] for row in M]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk <- A @ Mk + c_{n-k+1} I
        prod = [[sum(A[i][t] * Mk[t][j] for t in range(n) if A[i][t]) for j in range(n)]
                for i in range(n)]
        c = coeffs[n - k + 1]
        for i in range(n):
            prod[i][i] += c
        Mk = prod
        tr = sum(sum(A[i][t] * Mk[t][i] for t in range(n)) for i in range(n))
        coeffs[n - k] = -tr / k
    return RationalPoly(coeffs)


def factor_rational(p: RationalPoly) -> list[tuple[RationalPoly, int]]:
    """Irreducible factorisation over Q as (primitive factor, multiplicity) pairs."""
    if p.degree < 1:
        return []
    import sympy

    x = sympy.Symbol("x")
    ints = p.primitive().integer_coeffs()
    expr = sympy.Poly(list(reversed(ints)), x, domain="ZZ")
    _, facs = expr.factor_list()
    out = []
    for f, mult in facs:
        coeffs = [int(c) for c in reversed(f.all_coeffs())]
        out.append((RationalPoly(coeffs).primitive(), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out

"""Real algebraic numbers as (minimal polynomial, isolating interval) pairs.

Everything here is exact: signs are decided with Sturm sequences and interval
bisection over the rationals. Floating point only appears in ``approx``.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from functools import cached_property
from math import isqrt

from .poly import (
    RationalPoly,
    count_roots,
    factor_rational,
    root_bound,
    sturm_sequence,
)


class AlgebraicReal:
    """A real root of an irreducible rational polynomial.

    ``interval`` is an open interval ``(lo, hi)`` with rational endpoints that
    contains exactly one root of ``minpoly`` and whose endpoints are not roots.
    Instances are immutable; ``refine`` returns a new, narrower instance.
    """

    __slots__ = ("minpoly", "lo", "hi", "__dict__")

    def __init__(self, minpoly: RationalPoly, lo, hi, *, _checked: bool = False):
        minpoly = minpoly.primitive()
        lo, hi = Fraction(lo), Fraction(hi)
        if not _checked:
            if minpoly.degree < 1:
                raise ValueError("minimal polynomial must have positive degree")
            if not lo < hi:
                raise ValueError("isolating interval must have lo < hi")
            if minpoly(lo) == 0 or minpoly(hi) == 0:
                raise ValueError("isolating interval endpoints must not be roots")
            if count_roots(sturm_sequence(minpoly), lo, hi) != 1:
                raise ValueError("interval does not isolate exactly one root")
        object.__setattr__(self, "minpoly", minpoly)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicReal is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rational(cls, q) -> "AlgebraicReal":
        q = Fraction(q)
        return cls(RationalPoly((-q, 1)), q - 1, q + 1, _checked=True)

    @classmethod
    def root_in(cls, p: RationalPoly, lo, hi) -> "AlgebraicReal":
        """The unique root of (a factor of) ``p`` in ``(lo, hi)``.

        ``p`` may be reducible; the interval is shrunk until exactly one root
        of the relevant irreducible factor remains.
        """
        lo, hi = Fraction(lo), Fraction(hi)
        candidates = []
        for f, _ in factor_rational(p):
            seq = sturm_sequence(f)
            if f(lo) == 0 or f(hi) == 0:
                raise ValueError("interval endpoint is a root")
            if count_roots(seq, lo, hi) > 0:
                candidates.append((f, seq))
        if len(candidates) != 1:
            raise ValueError(f"interval contains roots of {len(candidates)} factors")
        f, seq = candidates[0]
        if count_roots(seq, lo, hi) != 1:
            raise ValueError("interval contains several roots")
        return cls(f, lo, hi, _checked=True)

    # -- structure ----------------------------------------------------
    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def is_rational(self) -> bool:
        return self.minpoly.degree == 1

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        c0, c1 = self.minpoly.coeffs
        return -c0 / c1

    @cached_property
    def _sturm(self):
        return sturm_sequence(self.minpoly)

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    def refine(self, width=None) -> "AlgebraicReal":
        """Bisect until the isolating interval is narrower than ``width``.

        With ``width=None`` a single bisection step is performed.
        """
        lo, hi = self.lo, self.hi
        f = self.minpoly
        if self.is_rational():
            q = self.as_rational()
            target = (hi - lo) / 4 if width is None else Fraction(width) / 2
            return AlgebraicReal(f, q - target, q + target, _checked=True)
        slo = f.sign_at(lo)
        while True:
            mid = (lo + hi) / 2
            smid = f.sign_at(mid)
            # irreducible of degree >= 2: no rational roots
            if smid == slo:
                lo = mid
            else:
                hi = mid
            if width is None or hi - lo < width:
                break
        return AlgebraicReal(f, lo, hi, _checked=True)

    # -- comparison ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == other
        if not isinstance(other, AlgebraicReal):
            return NotImplemented
        if self.minpoly != other.minpoly:
            return False
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo >= hi:
            return False
        if self.is_rational():
            return True
        return count_roots(self._sturm, lo, hi) == 1

    def __hash__(self):
        return hash(self.minpoly)

    def compare(self, other) -> int:
        """-1, 0 or 1 according to the sign of self - other."""
        if not isinstance(other, AlgebraicReal):
            other = AlgebraicReal.from_rational(other)
        if self == other:
            return 0
        a, b = self, other
        while True:
            if a.hi <= b.lo:
                return -1
            if b.hi <= a.lo:
                return 1
            a, b = a.refine(), b.refine()

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def sign(self) -> int:
        return self.compare(0)

    # -- arithmetic through number fields -----------------------------
    def _binary(self, other, op):
        from .field import NumberField, common_field

        if not isinstance(other, AlgebraicReal):
            other = AlgebraicReal.from_rational(other)
        K, x, y = common_field(NumberField(self).gen, NumberField(other).gen)
        return op(x, y).to_real()

    def __add__(self, other):
        return self._binary(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return AlgebraicReal.from_rational(other)._binary(self, lambda x, y: x - y)

    def __mul__(self, other):
        return self._binary(other, lambda x, y: x * y)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, lambda x, y: x / y)

    def __neg__(self):
        return AlgebraicReal(self.minpoly.reversed_scaled(-1), -self.hi, -self.lo, _checked=True)

    def __pow__(self, k: int):
        from .field import NumberField

        return (NumberField(self).gen ** k).to_real()

    def invert(self):
        from .field import NumberField

        return NumberField(self).gen.inverse().to_real()

    def sqrt(self) -> "AlgebraicReal":
        if self.sign() < 0:
            raise ValueError("square root of a negative algebraic number")
        if self.sign() == 0:
            return AlgebraicReal.from_rational(0)
        f = self.minpoly
        g = f.compose(RationalPoly((0, 0, 1)))
        a = self
        while True:
            lo, hi = sqrt_bounds(max(a.lo, Fraction(0)), a.hi)
            try:
                return AlgebraicReal.root_in(g, lo, hi)
            except ValueError:
                a = a.refine()

    # -- rendering ----------------------------------------------------
    def approx(self, digits: int = 12) -> Decimal:
        """Decimal approximation correct to about ``digits`` significant places."""
        a = self
        scale = Fraction(1, 10 ** (digits + 2))
        mag = max(abs(a.lo), abs(a.hi), Fraction(1))
        a = a.refine(scale * mag) if not a.is_rational() else a
        mid = a.as_rational() if a.is_rational() else (a.lo + a.hi) / 2
        with localcontext() as ctx:
            ctx.prec = digits + 5
            d = Decimal(mid.numerator) / Decimal(mid.denominator)
            ctx.prec = digits
            return +d

    def __float__(self):
        a = self.refine(Fraction(1, 10**18)) if not self.is_rational() else self
        return float((a.lo + a.hi) / 2) if not self.is_rational() else float(a.as_rational())

    def __repr__(self):
        return f"AlgebraicReal({self.minpoly.pretty()}, ~{self.approx(12)})"

    def __str__(self):
        if self.is_rational():
            return str(self.as_rational())
        return f"root of {self.minpoly.pretty()} near {self.approx(12)}"

    def to_json(self, digits: int = 12) -> dict:
        return {
            "minpoly": [str(c) for c in self.minpoly.integer_coeffs()],
            "interval": [str(self.lo), str(self.hi)],
            "decimal": str(self.approx(digits)),
            "digits": digits,
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraicReal":
        poly = RationalPoly(int(c) for c in data["minpoly"])
        lo, hi = (Fraction(s) for s in data["interval"])
        return cls(poly, lo, hi)


def sqrt_bounds(lo: Fraction, hi: Fraction, bits: int = 64) -> tuple[Fraction, Fraction]:
    """Rational bounds l <= sqrt(lo), sqrt(hi) <= u for 0 <= lo <= hi."""
    scale = 1 << bits

    def down(q: Fraction) -> Fraction:
        return Fraction(isqrt(q.numerator * scale * scale // q.denominator), scale)

    def up(q: Fraction) -> Fraction:
        t = -(-q.numerator * scale * scale // q.denominator)
        r = isqrt(t)
        if r * r < t:
            r += 1
        return Fraction(r, scale)

    return down(lo), up(hi)


def isolate_real_roots(p: RationalPoly) -> list[AlgebraicReal]:
    """All distinct real roots of ``p``, increasing, with disjoint intervals."""
    if p.is_zero():
        raise ValueError("cannot isolate the roots of the zero polynomial")
    roots: list[AlgebraicReal] = []
    for f, _ in factor_rational(p):
        roots.extend(_isolate_irreducible(f))
    roots.sort(key=lambda r: r.lo)
    # roots of distinct factors are distinct; shrink until pairwise disjoint
    changed = True
    while changed:
        changed = False
        for i in range(len(roots) - 1):
            a, b = roots[i], roots[i + 1]
            while not (a.hi <= b.lo or b.hi <= a.lo):
                a, b = a.refine(), b.refine()
                changed = True
            roots[i], roots[i + 1] = a, b
        roots.sort(key=lambda r: r.lo)
    return roots


def _isolate_irreducible(f: RationalPoly) -> list[AlgebraicReal]:
    if f.degree == 1:
        return [AlgebraicReal.from_rational(-f[0] / f[1])]
    seq = sturm_sequence(f)
    B = root_bound(f)
    out = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append(AlgebraicReal(f, lo, hi, _checked=True))
            continue
        mid = (lo + hi) / 2
        # irreducible, degree >= 2: mid is never a root
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(out, key=lambda r: r.lo)


def sign_of_poly_at(g: RationalPoly, a: AlgebraicReal) -> int:
    """Exact sign of g(a)."""
    if g.is_zero():
        return 0
    if (g % a.minpoly).is_zero():
        return 0
    if a.is_rational():
        return g.sign_at(a.as_rational())
    while True:
        lo, hi = g.eval_interval(a.lo, a.hi)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        a = a.refine()

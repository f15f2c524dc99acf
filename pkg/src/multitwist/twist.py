"""Words in two multitwists, their derivative matrices, and expansion factors.

A twist along the a-multicurve acts on the flat structure with derivative
(1 sqrt(mu); 0 1) and a twist along b with (1 0; -sqrt(mu) 1). Products stay in
the ring of matrices (p, q sqrt(mu); r sqrt(mu), s) with p, q, r, s integer
polynomials in mu, which is how they are stored here.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from .algebra import AlgebraicReal, NumberField, RationalPoly, charpoly, factor_rational
from .algebra.field import FieldElement
from .algebra.poly import discriminant
from .algebra.real import sqrt_bounds

GENERATORS = ("A", "B")
_TOKEN = re.compile(r"^([AB])(?:\^(-?\d+))?$")


class WordSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class TwistWord:
    """Reduced word: adjacent letters differ and every exponent is nonzero."""

    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def parse(cls, text: str) -> "TwistWord":
        out = []
        for tok in text.split():
            m = _TOKEN.match(tok)
            if not m:
                raise WordSyntaxError(f"bad token {tok!r}; expected A, B, A^k or B^-k")
            k = int(m.group(2)) if m.group(2) is not None else 1
            if k == 0:
                raise WordSyntaxError(f"zero exponent in {tok!r}")
            out.append((m.group(1), k))
        return cls(tuple(out))

    @classmethod
    def power(cls, gen: str, k: int) -> "TwistWord":
        return cls(((gen, k),)) if k else cls()

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.letters + other.letters)

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple((g, -k) for g, k in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def substitute(self, exponent_a: int, exponent_b: int) -> "TwistWord":
        """Replace A by A^exponent_a and B by B^exponent_b."""
        scale = {"A": exponent_a, "B": exponent_b}
        return TwistWord(tuple((g, k * scale[g]) for g, k in self.letters))

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(g if k == 1 else f"{g}^{k}" for g, k in self.letters)


def _reduce(letters) -> tuple[tuple[str, int], ...]:
    out: list[list] = []
    for g, k in letters:
        if g not in GENERATORS:
            raise WordSyntaxError(f"unknown generator {g!r}")
        k = int(k)
        if out and out[-1][0] == g:
            out[-1][1] += k
            if out[-1][1] == 0:
                out.pop()
        elif k:
            out.append([g, k])
    return tuple((g, k) for g, k in out)


# -- structured matrices ---------------------------------------------------

_X = RationalPoly.x()
_ONE = RationalPoly.const(1)
_ZERO = RationalPoly()


@dataclass(frozen=True)
class TwistMatrix:
    """(p(mu), q(mu) sqrt(mu); r(mu) sqrt(mu), s(mu)) with integer polynomials."""

    p: RationalPoly
    q: RationalPoly
    r: RationalPoly
    s: RationalPoly

    @classmethod
    def identity(cls) -> "TwistMatrix":
        return cls(_ONE, _ZERO, _ZERO, _ONE)

    @classmethod
    def generator(cls, gen: str, k: int = 1) -> "TwistMatrix":
        kk = RationalPoly.const(k)
        if gen == "A":
            return cls(_ONE, kk, _ZERO, _ONE)
        return cls(_ONE, _ZERO, -kk, _ONE)

    def __matmul__(self, o: "TwistMatrix") -> "TwistMatrix":
        return TwistMatrix(
            self.p * o.p + _X * self.q * o.r,
            self.p * o.q + self.q * o.s,
            self.r * o.p + self.s * o.r,
            _X * self.r * o.q + self.s * o.s,
        )

    @property
    def determinant(self) -> RationalPoly:
        return self.p * self.s - _X * self.q * self.r

    @property
    def trace(self) -> RationalPoly:
        return self.p + self.s

    def evaluate(self, mu: float) -> tuple[tuple[float, float], tuple[float, float]]:
        root = mu ** 0.5
        f = lambda P: float(sum(float(c) * mu ** i for i, c in enumerate(P.coeffs)))  # noqa: E731
        return ((f(self.p), f(self.q) * root), (f(self.r) * root, f(self.s)))

    def to_json(self) -> dict:
        return {k: getattr(self, k).pretty("mu") for k in "pqrs"}


def derivative_matrix(w: TwistWord, mu: AlgebraicReal | None = None) -> TwistMatrix:
    """Derivative matrix of the word. The polynomial entries do not depend on mu."""
    M = TwistMatrix.identity()
    for g, k in w.letters:
        M = M @ TwistMatrix.generator(g, k)
    return M


rho = derivative_matrix


class Classification(enum.Enum):
    FINITE_ORDER = "FINITE_ORDER"
    REDUCIBLE = "REDUCIBLE"
    PSEUDO_ANOSOV = "PSEUDO_ANOSOV"


KERNEL_CAVEAT = ("finite-order classification refers to the image under the derivative map, "
                 "whose kernel is finite")


def mu_field(mu: AlgebraicReal) -> NumberField:
    return NumberField(mu)


def trace_value(w: TwistWord, mu: AlgebraicReal) -> FieldElement:
    F = mu_field(mu)
    return F.from_poly(rho(w).trace) if F.degree > 1 else F(rho(w).trace(mu.as_rational()))


def classify(w: TwistWord, mu: AlgebraicReal) -> Classification:
    t = abs(trace_value(w, mu))
    c = t.compare(2)
    if c < 0:
        return Classification.FINITE_ORDER
    if c == 0:
        return Classification.REDUCIBLE
    return Classification.PSEUDO_ANOSOV


class NotPseudoAnosov(ValueError):
    def __init__(self, classification: Classification):
        super().__init__(f"word is {classification.value}, not pseudo-Anosov")
        self.classification = classification


@dataclass(frozen=True)
class ExpansionFactor:
    value: AlgebraicReal
    trace: FieldElement  # signed trace, an element of Q(mu)
    trace_poly: RationalPoly  # the same trace as a polynomial in mu
    mu: AlgebraicReal

    @property
    def minpoly(self) -> RationalPoly:
        return self.value.minpoly.monic()

    @property
    def degree(self) -> int:
        return self.value.degree

    def to_json(self, digits: int = 12) -> dict:
        lam = self.value.to_json(digits)
        lam["minpoly_text"] = self.minpoly.pretty()
        return {
            "lambda": lam,
            "minpoly": str(self.minpoly),
            "trace": self.trace_poly.pretty("mu"),
        }


def _lambda_norm_poly(P: FieldElement) -> RationalPoly:
    """Char poly of multiplication by y on Q(mu)[y]/(y^2 - P y + 1)."""
    F = P.field
    d = F.degree
    # basis theta^i (i < d) then theta^i * y
    LP = P.multiplication_matrix()
    M = [[Fraction(0)] * (2 * d) for _ in range(2 * d)]
    for i in range(d):
        M[d + i][i] = Fraction(1)  # y * theta^i = theta^i y
    for j in range(d):
        # y * (theta^j y) = theta^j (P y - 1)
        M[j][d + j] -= 1
        for i in range(d):
            M[d + i][d + j] += LP[i][j]
    return charpoly(M)


def expansion_factor(w: TwistWord, mu: AlgebraicReal) -> ExpansionFactor:
    cls = classify(w, mu)
    if cls is not Classification.PSEUDO_ANOSOV:
        raise NotPseudoAnosov(cls)
    tr = trace_value(w, mu)
    P = abs(tr)
    h = _lambda_norm_poly(P)
    factors = [f for f, _ in factor_rational(h)]
    Preal = P.to_real()
    while True:
        lo, hi = Preal.interval
        lo = max(lo, Fraction(2))
        slo, shi = sqrt_bounds(lo * lo - 4, hi * hi - 4)
        llo, lhi = (lo + slo) / 2 - Fraction(1, 10**30), (hi + shi) / 2 + Fraction(1, 10**30)
        hits = []
        for f in factors:
            try:
                hits.append(AlgebraicReal.root_in(f, llo, lhi))
            except ValueError:
                continue
        if len(hits) == 1:
            lam = hits[0]
            break
        Preal = Preal.refine()
    return ExpansionFactor(lam, tr, rho(w).trace, mu)


def _squarefree_kernel(n: int) -> int:
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            out *= p
    return sign * out


@dataclass(frozen=True)
class TraceFieldData:
    degree: int
    polynomial_discriminant: int
    quadratic_radicand: int | None  # d with Q(lambda) = Q(sqrt(d)) when degree is 2
    field_discriminant: int | None  # exact only for quadratic fields
    note: str = "filters for commensurability, not complete invariants"

    def describe(self) -> str:
        if self.quadratic_radicand is not None:
            return f"Q(sqrt({self.quadratic_radicand}))"
        return f"degree {self.degree}, polynomial discriminant {self.polynomial_discriminant}"


def trace_field_data(e: ExpansionFactor) -> TraceFieldData:
    f = e.minpoly
    if f.degree < 2:
        raise ValueError("expansion factor is rational")
    prim = f.primitive()
    disc = discriminant(prim)
    disc_int = int(disc) if Fraction(disc).denominator == 1 else disc
    if f.degree == 2:
        d = _squarefree_kernel(int(disc))
        fd = d if d % 4 == 1 else 4 * d
        return TraceFieldData(2, int(disc), d, fd)
    return TraceFieldData(f.degree, disc_int, None, None)


def image_is_free(mu: AlgebraicReal) -> bool:
    """Whether the derivative image of the two-generator group is free (sqrt(mu) >= 2)."""
    return mu.compare(4) >= 0

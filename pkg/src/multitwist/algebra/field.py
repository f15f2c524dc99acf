"""Real number fields Q(theta) given by a real primitive element.

A ``NumberField`` is identified by its generator, an :class:`AlgebraicReal`.
Elements are rational coordinate vectors over the power basis
``1, theta, ..., theta^(d-1)``. Two elements living in different fields are
moved into a compositum by :func:`common_field`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .linalg import nullspace, rref, solve, span_basis
from .poly import RationalPoly, charpoly, is_squarefree
from .real import AlgebraicReal, isolate_real_roots, sign_of_poly_at

_COMPOSITA: dict = {}


class NumberField:
    """The real field Q(theta) for a real algebraic ``theta``."""

    __slots__ = ("theta", "modulus", "degree", "__dict__")

    def __init__(self, theta: AlgebraicReal):
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "modulus", theta.minpoly.monic())
        object.__setattr__(self, "degree", theta.degree)

    def __setattr__(self, name, value):
        raise AttributeError("NumberField is immutable")

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls(AlgebraicReal.from_rational(0))

    @cached_property
    def key(self) -> tuple:
        """Canonical identity: minimal polynomial and index of the real root."""
        if self.degree == 1:
            return ((), 0)
        roots = isolate_real_roots(self.theta.minpoly)
        idx = next(i for i, r in enumerate(roots) if r == self.theta)
        return (self.theta.minpoly.coeffs, idx)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.degree == 1:
            return "NumberField(Q)"
        return f"NumberField({self.theta.minpoly.pretty()}, ~{self.theta.approx(8)})"

    # -- elements ------------------------------------------------------
    def element(self, coords: Iterable) -> "FieldElement":
        cs = [Fraction(c) for c in coords]
        if len(cs) > self.degree:
            return self.from_poly(RationalPoly(cs))
        cs += [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    def from_poly(self, p: RationalPoly) -> "FieldElement":
        r = p % self.modulus if p.degree >= self.degree else p
        return self.element(r[i] for i in range(self.degree))

    def __call__(self, q) -> "FieldElement":
        if isinstance(q, FieldElement):
            if q.field == self:
                return q
            if q.is_rational():
                return self(q.rational())
            raise ValueError("element does not belong to this field")
        return self.element([q])

    @property
    def zero(self) -> "FieldElement":
        return self.element([])

    @property
    def one(self) -> "FieldElement":
        return self.element([1])

    @cached_property
    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self.element([self.theta.as_rational()])
        return self.element([0, 1])

    @cached_property
    def _power_table(self) -> list[tuple[Fraction, ...]]:
        """Reductions of theta^k for k < 2d - 1."""
        d = self.degree
        table = []
        for k in range(2 * d - 1):
            r = RationalPoly([0] * k + [1]) % self.modulus
            table.append(tuple(r[i] for i in range(d)))
        return table


class FieldElement:
    """An element of a real number field, as power-basis coordinates."""

    __slots__ = ("field", "coords", "__dict__")

    def __init__(self, field: NumberField, coords: tuple[Fraction, ...]):
        if len(coords) != field.degree:
            raise ValueError("coordinate length must equal the field degree")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # -- structure -----------------------------------------------------
    @property
    def poly(self) -> RationalPoly:
        return RationalPoly(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is irrational")
        return self.coords[0]

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other
            if other.is_rational():
                return self.field(other.rational())
            if self.is_rational():
                raise _NeedsLift(other.field)
            raise ValueError("elements of different fields; use common_field first")
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        try:
            o = self._coerce(other)
        except _NeedsLift as e:
            return e.field(self.rational()) + other
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except _NeedsLift as e:
            return e.field(self.rational()) * other
        if o is NotImplemented:
            return o
        d = self.field.degree
        if o.is_rational():
            c = o.coords[0]
            return FieldElement(self.field, tuple(a * c for a in self.coords))
        if self.is_rational():
            c = self.coords[0]
            return FieldElement(self.field, tuple(a * c for a in o.coords))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    if b:
                        prod[i + j] += a * b
        table = self.field._power_table
        out = [Fraction(0)] * d
        for k, c in enumerate(prod):
            if c:
                for i, t in enumerate(table[k]):
                    if t:
                        out[i] += c * t
        return FieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        if self.is_rational():
            return self.field(1 / self.coords[0])
        from .poly import poly_xgcd

        g, s, _ = poly_xgcd(self.poly, self.field.modulus)
        # modulus irreducible so g = 1
        return self.field.from_poly(s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        try:
            o = self._coerce(other)
        except _NeedsLift as e:
            return e.field(self.rational()) / other
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return self.coords == other.coords
            if self.is_rational() and other.is_rational():
                return self.coords[0] == other.coords[0]
            _, x, y = common_field(self, other)
            return x.coords == y.coords
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field, self.coords))

    def sign(self) -> int:
        if self.is_rational():
            c = self.coords[0]
            return (c > 0) - (c < 0)
        return sign_of_poly_at(self.poly, self.field.theta)

    def compare(self, other) -> int:
        return (self - other).sign()

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- conversion ----------------------------------------------------
    def multiplication_matrix(self) -> list[list[Fraction]]:
        """Matrix of x -> self*x on the power basis (column i = self*theta^i)."""
        d = self.field.degree
        cols = []
        e = self
        t = self.field.element([0, 1]) if d > 1 else self.field.one
        for i in range(d):
            cols.append(e.coords)
            e = e * t
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    @cached_property
    def minimal_polynomial(self) -> RationalPoly:
        """Monic minimal polynomial over Q, from the first linear dependence of powers."""
        if self.is_rational():
            return RationalPoly((-self.coords[0], 1))
        powers = [self.field.one.coords]
        e = self.field.one
        while True:
            e = e * self
            powers.append(e.coords)
            # columns are powers; look for a kernel vector
            M = [[p[i] for p in powers] for i in range(self.field.degree)]
            ker = nullspace(M, len(powers))
            if ker:
                v = ker[0]
                return RationalPoly(v).monic()

    def to_real(self) -> AlgebraicReal:
        if self.is_rational():
            return AlgebraicReal.from_rational(self.coords[0])
        f = self.minimal_polynomial
        theta = self.field.theta
        g = self.poly
        while True:
            lo, hi = g.eval_interval(theta.lo, theta.hi)
            if lo < hi:
                try:
                    return AlgebraicReal.root_in(f, lo, hi)
                except ValueError:
                    pass
            theta = theta.refine()

    def approx(self, digits: int = 12):
        return self.to_real().approx(digits)

    def __float__(self):
        return float(self.to_real())

    def sqrt(self) -> "FieldElement":
        """The positive square root if it lies in this field; otherwise ValueError."""
        K, emb, root = adjoin_sqrt(self)
        if K.degree != self.field.degree:
            raise ValueError("square root does not lie in the field")
        inv = embedding_inverse(emb)
        return inv(root)

    def __repr__(self):
        if self.is_rational():
            return f"FieldElement({self.coords[0]})"
        return f"FieldElement({self.poly.pretty('t')} ~{self.approx(10)})"

    def pretty(self, var: str = "t") -> str:
        return self.poly.pretty(var)


class _NeedsLift(Exception):
    def __init__(self, field):
        self.field = field


# -- embeddings -----------------------------------------------------------

class FieldEmbedding:
    """A field embedding F -> K sending F's generator to ``image``."""

    __slots__ = ("source", "target", "image", "__dict__")

    def __init__(self, source: NumberField, target: NumberField, image: FieldElement):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "image", image)

    def __setattr__(self, name, value):
        raise AttributeError("FieldEmbedding is immutable")

    @cached_property
    def matrix(self) -> list[list[Fraction]]:
        """target_degree x source_degree matrix; column i holds image^i."""
        cols = []
        e = self.target.one
        for _ in range(self.source.degree):
            cols.append(e.coords)
            e = e * self.image
        return [[c[i] for c in cols] for i in range(self.target.degree)]

    def __call__(self, x) -> FieldElement:
        if not isinstance(x, FieldElement):
            return self.target(x)
        if x.field != self.source:
            if x.is_rational():
                return self.target(x.rational())
            raise ValueError("element not in the embedding's source field")
        M = self.matrix
        return FieldElement(self.target, tuple(
            sum((M[i][j] * x.coords[j] for j in range(self.source.degree)), Fraction(0))
            for i in range(self.target.degree)))


def identity_embedding(F: NumberField) -> FieldEmbedding:
    return FieldEmbedding(F, F, F.element([0, 1]) if F.degree > 1 else F.one * F.theta.as_rational())


def embedding_inverse(emb: FieldEmbedding) -> "PartialInverse":
    return PartialInverse(emb)


class PartialInverse:
    """Pull an element of the target back to the source, if it lies in the image."""

    def __init__(self, emb: FieldEmbedding):
        self.emb = emb

    def __call__(self, y: FieldElement) -> FieldElement:
        y = self.emb.target(y) if not isinstance(y, FieldElement) else y
        if y.field != self.emb.target:
            if y.is_rational():
                return self.emb.source(y.rational())
            raise ValueError("element not in the target field")
        x = solve(self.emb.matrix, list(y.coords))
        if x is None:
            raise ValueError("element is not in the image of the embedding")
        return self.emb.source.element(x)


# -- compositum ----------------------------------------------------------

def _kpoly_divmod(a: list, b: list, K: NumberField):
    a = list(a)
    q = [K.zero] * max(len(a) - len(b) + 1, 1)
    inv = b[-1].inverse()
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        shift = len(a) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = a[shift + i] - c * bi
        a.pop()
        while a and a[-1].is_zero():
            a.pop()
    return q, a


def kpoly_gcd(a: list, b: list, K: NumberField) -> list:
    """Monic gcd of polynomials over K (lists of FieldElement, lowest first)."""

    def trim(p):
        p = list(p)
        while p and p[-1].is_zero():
            p.pop()
        return p

    a, b = trim(a), trim(b)
    while b:
        _, r = _kpoly_divmod(a, b, K)
        a, b = b, trim(r)
    inv = a[-1].inverse()
    return [c * inv for c in a]


def _tensor_mult_matrix(f: RationalPoly, g: RationalPoly, c: int) -> list[list[Fraction]]:
    """Matrix of multiplication by x + c*y on Q[x]/(f) (x) Q[y]/(g)."""
    m, n = f.degree, g.degree
    fm, gm = f.monic(), g.monic()

    def idx(i, j):
        return i * n + j

    N = m * n
    M = [[Fraction(0)] * N for _ in range(N)]
    for i in range(m):
        for j in range(n):
            col = idx(i, j)
            # x * x^i y^j
            if i + 1 < m:
                M[idx(i + 1, j)][col] += 1
            else:
                for t in range(m):
                    M[idx(t, j)][col] -= fm[t]
            # c * y * x^i y^j
            if j + 1 < n:
                M[idx(i, j + 1)][col] += c
            else:
                for t in range(n):
                    M[idx(i, t)][col] -= c * gm[t]
    return M


def compositum(F1: NumberField, F2: NumberField) -> tuple[NumberField, FieldEmbedding, FieldEmbedding]:
    """A field K containing both, with embeddings F1 -> K and F2 -> K."""
    key = (F1.key, F2.key)
    if key in _COMPOSITA:
        return _COMPOSITA[key]
    result = _compositum(F1, F2)
    _COMPOSITA[key] = result
    return result


def _compositum(F1, F2):
    if F2.degree == 1:
        return F1, identity_embedding(F1), FieldEmbedding(F2, F1, F1(F2.theta.as_rational()))
    if F1.degree == 1:
        return F2, FieldEmbedding(F1, F2, F2(F1.theta.as_rational())), identity_embedding(F2)
    if F1 == F2:
        return F1, identity_embedding(F1), identity_embedding(F1)
    # try to find F2's generator inside F1 or vice versa cheaply
    for big, small, swap in ((F1, F2, False), (F2, F1, True)):
        if big.degree % small.degree == 0:
            img = _express_in(small.theta, big)
            if img is not None:
                e_small = FieldEmbedding(small, big, img)
                e_big = identity_embedding(big)
                return (big, e_small, e_big) if swap else (big, e_big, e_small)
    f, g = F1.theta.minpoly, F2.theta.minpoly
    alpha, beta = F1.theta, F2.theta
    for c in (1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11, 13):
        h = charpoly(_tensor_mult_matrix(f, g, c))
        if not is_squarefree(h):
            continue
        a, b = alpha, beta
        while True:
            lo = a.lo + (c * b.lo if c > 0 else c * b.hi)
            hi = a.hi + (c * b.hi if c > 0 else c * b.lo)
            try:
                theta = AlgebraicReal.root_in(h, lo, hi)
                break
            except ValueError:
                a, b = a.refine(), b.refine()
        K = NumberField(theta)
        # alpha is the common root of f(X) and g((theta - X)/c)
        P1 = [K(co) for co in f.coeffs]
        lin = [K.gen / c, K(Fraction(-1, c))]
        P2 = [K.zero]
        power = [K.one]
        for co in g.coeffs:
            P2 = _kpoly_add(P2, [co * p for p in power])
            power = _kpoly_mul(power, lin)
        G = kpoly_gcd(P1, P2, K)
        if len(G) != 2:
            continue
        a_img = -G[0]
        b_img = (K.gen - a_img) / c
        return K, FieldEmbedding(F1, K, a_img), FieldEmbedding(F2, K, b_img)
    raise RuntimeError("no primitive element found for the compositum")


def _kpoly_add(a, b):
    n = max(len(a), len(b))
    z = (a or b)[0] * 0
    return [(a[i] if i < len(a) else z) + (b[i] if i < len(b) else z) for i in range(n)]


def _kpoly_mul(a, b):
    z = a[0] * 0
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _express_in(beta: AlgebraicReal, K: NumberField) -> FieldElement | None:
    """beta as an element of K, or None when beta is not in K."""
    if beta.is_rational():
        return K(beta.as_rational())
    if K.degree % beta.degree:
        return None
    g = beta.minpoly
    f = K.theta.minpoly
    theta = K.theta
    for c in (1, -1, 2, -2, 3, -3, 5, -5, 7):
        h = charpoly(_tensor_mult_matrix(f, g, c))
        if not is_squarefree(h):
            continue
        a, b = theta, beta
        while True:
            lo = a.lo + (c * b.lo if c > 0 else c * b.hi)
            hi = a.hi + (c * b.hi if c > 0 else c * b.lo)
            try:
                gamma = AlgebraicReal.root_in(h, lo, hi)
                break
            except ValueError:
                a, b = a.refine(), b.refine()
        if gamma.degree != K.degree:
            return None
        # h squarefree makes gamma primitive for Q(theta, beta), which then equals K
        L = NumberField(gamma)
        P1 = [L(co) for co in f.coeffs]
        lin = [L.gen / c, L(Fraction(-1, c))]
        P2 = [L.zero]
        power = [L.one]
        for co in g.coeffs:
            P2 = _kpoly_add(P2, [co * p for p in power])
            power = _kpoly_mul(power, lin)
        G = kpoly_gcd(P1, P2, L)
        if len(G) != 2:
            continue
        theta_in_L = -G[0]
        emb = FieldEmbedding(K, L, theta_in_L)
        beta_in_L = (L.gen - theta_in_L) / c
        return PartialInverse(emb)(beta_in_L)
    return None


def common_field(*xs) -> tuple:
    """Move elements (FieldElement or rationals) into one field.

    Returns ``(K, x1', x2', ...)``.
    """
    fields = [x.field for x in xs if isinstance(x, FieldElement) and not x.is_rational()]
    if not fields:
        K = NumberField.rationals()
        return (K, *[K(x.rational() if isinstance(x, FieldElement) else x) for x in xs])
    K = fields[0]
    embs = {K.key: identity_embedding(K)}
    for F in fields[1:]:
        if F.key in embs:
            continue
        K2, eK, eF = compositum(K, F)
        embs = {k: _compose(e, eK) for k, e in embs.items()}
        embs[F.key] = eF
        K = K2
    out = []
    for x in xs:
        if isinstance(x, FieldElement) and not x.is_rational():
            out.append(embs[x.field.key](x))
        else:
            out.append(K(x.rational() if isinstance(x, FieldElement) else x))
    return (K, *out)


def _compose(inner: FieldEmbedding, outer: FieldEmbedding) -> FieldEmbedding:
    return FieldEmbedding(inner.source, outer.target, outer(inner.image))


def common_field_of_vectors(*vecs: Sequence[FieldElement]) -> tuple[NumberField, list[list[FieldElement]]]:
    flat = [x for v in vecs for x in v]
    res = common_field(*flat)
    K, moved = res[0], list(res[1:])
    out, i = [], 0
    for v in vecs:
        out.append(moved[i:i + len(v)])
        i += len(v)
    return K, out


def adjoin_sqrt(a: FieldElement) -> tuple[NumberField, FieldEmbedding, FieldElement]:
    """K = F(sqrt(a)) with the embedding F -> K and the positive root in K."""
    F = a.field
    if a.sign() < 0:
        raise ValueError("square root of a negative element")
    if a.is_zero():
        return F, identity_embedding(F), F.zero
    beta = a.to_real().sqrt()
    if beta.is_rational():
        return F, identity_embedding(F), F(beta.as_rational())
    B = NumberField(beta)
    if a.minimal_polynomial.degree == F.degree:
        # F = Q(a) = Q(beta^2), so F embeds in Q(beta) directly
        # theta_F = sum c_i a^i
        powers = [F.one]
        for _ in range(F.degree - 1):
            powers.append(powers[-1] * a)
        M = [[p.coords[i] for p in powers] for i in range(F.degree)]
        c = solve(M, list(F.element([0, 1]).coords) if F.degree > 1 else [F.theta.as_rational()])
        b2 = B.gen * B.gen
        img = B.zero
        pw = B.one
        for ci in c:
            img = img + pw * ci
            pw = pw * b2
        return B, FieldEmbedding(F, B, img), B.gen
    K, eF, eB = compositum(F, B)
    return K, eF, eB(B.gen)


def subfield_generated(elements: Sequence[FieldElement]) -> FieldElement:
    """A primitive element of the subfield generated over Q by ``elements``.

    All elements must share one field.
    """
    K = elements[0].field if elements else NumberField.rationals()
    gens = [e for e in elements if not e.is_rational()]
    if not gens:
        return K.one
    prim = gens[0]
    for e in gens[1:]:
        if _in_subfield(e, prim):
            continue
        base_deg = prim.minimal_polynomial.degree
        for c in range(1, 50):
            cand = prim + e * c
            deg = cand.minimal_polynomial.degree
            if deg > base_deg and _in_subfield(e, cand) and _in_subfield(prim, cand):
                prim = cand
                break
        else:
            raise RuntimeError("no primitive element found")
    return prim


def subfield_basis(gen: FieldElement) -> list[list[Fraction]]:
    """Echelon basis (in K's coordinates) of the subfield Q(gen)."""
    d = gen.minimal_polynomial.degree
    powers = [gen.field.one]
    for _ in range(d - 1):
        powers.append(powers[-1] * gen)
    return span_basis([p.coords for p in powers])


def _in_subfield(x: FieldElement, gen: FieldElement) -> bool:
    B = subfield_basis(gen)
    return len(rref(B + [list(x.coords)])[1]) == len(B)


def same_subfield(g1: FieldElement, g2: FieldElement) -> bool:
    """Whether Q(g1) and Q(g2) coincide inside their common field."""
    _, a, b = common_field(g1, g2)
    return subfield_basis(a) == subfield_basis(b)

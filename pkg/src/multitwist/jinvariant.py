"""The J invariant of a rectangle tiling, stored as an element of K (x)_Q K.

A tensor sum_{i,j} C[i][j] * theta^i (x) theta^j is kept as the rational matrix C
over the power basis of K. For a rectangle tiling only the e1^e2 component of J
is nonzero, and it is 2 * sum(width (x) height).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .algebra import FieldElement, NumberField, compositum, same_subfield, subfield_generated
from .algebra.field import FieldEmbedding, identity_embedding
from .algebra.linalg import matmul, nullspace, rank, rref, solve, transpose


def _zeros(d: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * d for _ in range(d)]


@dataclass(frozen=True)
class JTensor:
    field: NumberField
    matrix: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def zero(cls, K: NumberField) -> "JTensor":
        return cls(K, tuple(map(tuple, _zeros(K.degree))))

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[FieldElement, FieldElement]], coefficient=1,
                   K: NumberField | None = None) -> "JTensor":
        """coefficient * sum(x (x) y); all elements must already lie in K."""
        if K is None:
            K = next((x.field for p in pairs for x in p if isinstance(x, FieldElement)),
                     NumberField.rationals())
        d = K.degree
        C = _zeros(d)
        for x, y in pairs:
            xc, yc = K(x).coords if not isinstance(x, FieldElement) else x.coords, \
                K(y).coords if not isinstance(y, FieldElement) else y.coords
            for i in range(d):
                if xc[i]:
                    for j in range(d):
                        C[i][j] += coefficient * xc[i] * yc[j]
        return cls(K, tuple(map(tuple, C)))

    # -- arithmetic ----------------------------------------------------
    def embed(self, emb: FieldEmbedding) -> "JTensor":
        if emb.source != self.field:
            raise ValueError("embedding source does not match the tensor's field")
        E = emb.matrix
        C = matmul(matmul(E, self.matrix), transpose(E))
        return JTensor(emb.target, tuple(map(tuple, C)))

    def __add__(self, other: "JTensor") -> "JTensor":
        a, b = to_common_field(self, other)
        return JTensor(a.field, tuple(tuple(x + y for x, y in zip(r1, r2))
                                      for r1, r2 in zip(a.matrix, b.matrix)))

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, q) -> "JTensor":
        q = Fraction(q)
        return JTensor(self.field, tuple(tuple(q * x for x in row) for row in self.matrix))

    def __mul__(self, q):
        return self.scaled(q)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, JTensor):
            return NotImplemented
        if self.field == other.field:
            return self.matrix == other.matrix
        a, b = to_common_field(self, other)
        return a.matrix == b.matrix

    def __hash__(self):
        return hash(self.matrix) if self.field.degree == 1 else hash((self.field.degree, self.rank))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.matrix for x in row)

    # -- structure -----------------------------------------------------
    @cached_property
    def rank(self) -> int:
        return rank(self.matrix)

    @cached_property
    def decomposition(self) -> list[tuple[FieldElement, FieldElement]]:
        """Pairs (x_t, y_t) with J = sum x_t (x) y_t; the y_t are the reduced rows of the matrix."""
        R, pivots = rref(self.matrix)
        K = self.field
        out = []
        for t, p in enumerate(pivots):
            col = [self.matrix[i][p] for i in range(K.degree)]
            out.append((K.element(col), K.element(R[t])))
        return out

    @cached_property
    def width_basis(self) -> list[FieldElement]:
        """Canonical basis of the left span (column space of the matrix)."""
        R, _ = rref(transpose(self.matrix))
        return [self.field.element(r) for r in R]

    @cached_property
    def height_basis(self) -> list[FieldElement]:
        R, _ = rref(self.matrix)
        return [self.field.element(r) for r in R]

    def pretty(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for x, y in self.decomposition:
            terms.append(f"({x.pretty(var)})⊗({y.pretty(var)})")
        return " + ".join(terms)

    def to_json(self) -> dict:
        return {
            "field_minpoly": [str(c) for c in self.field.modulus.coeffs] if self.field.degree > 1 else [],
            "field_generator": float(self.field.theta) if self.field.degree > 1 else None,
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "terms": self.pretty(),
            "rank": self.rank,
        }


def _embedding_pair(F1: NumberField, F2: NumberField):
    if F1 == F2:
        e = identity_embedding(F1)
        return F1, e, e
    if F1.degree == 1:
        return F2, FieldEmbedding(F1, F2, F2.one * F1.theta.as_rational()), identity_embedding(F2)
    if F2.degree == 1:
        return F1, identity_embedding(F1), FieldEmbedding(F2, F1, F1.one * F2.theta.as_rational())
    return compositum(F1, F2)


def to_common_field(*tensors: JTensor) -> list[JTensor]:
    K = tensors[0].field
    embs = {K.key: identity_embedding(K)}
    for T in tensors[1:]:
        if T.field.key in embs:
            continue
        K2, eK, eT = _embedding_pair(K, T.field)
        embs = {k: FieldEmbedding(e.source, K2, eK(e.image)) for k, e in embs.items()}
        embs[T.field.key] = eT
        K = K2
    return [T.embed(embs[T.field.key]) for T in tensors]


def _same_field_elements(*xs):
    from .algebra import common_field
    return common_field(*xs)


def j_of_rectangle(width, height) -> JTensor:
    K, w, h = _same_field_elements(width, height)
    if w.sign() <= 0 or h.sign() <= 0:
        raise ValueError("rectangle dimensions must be positive")
    return JTensor.from_pairs([(w, h)], 2, K)


def j_of_flat(f) -> JTensor:
    """Sum of rectangle invariants over all squares of a (possibly pulled-back) flat structure."""
    K = f.field
    C = _zeros(K.degree)
    # accumulate width (x) height, grouping repeated squares
    counts: dict = {}
    for s in range(f.complex.squares):
        w, h = f.dimensions(s)
        key = (w.coords, h.coords)
        counts[key] = counts.get(key, 0) + 1
    for (wc, hc), m in counts.items():
        if K.element(wc).sign() <= 0 or K.element(hc).sign() <= 0:
            raise ValueError("nonpositive rectangle")
        for i in range(K.degree):
            if wc[i]:
                for j in range(K.degree):
                    C[i][j] += 2 * m * wc[i] * hc[j]
    return JTensor(K, tuple(map(tuple, C)))


def _move(J: JTensor, *xs):
    """Put J and scalars into one field."""
    from .algebra import common_field
    fe = [x for x in xs if isinstance(x, FieldElement) and not x.is_rational()]
    if not fe:
        return (J, *[J.field(x.rational() if isinstance(x, FieldElement) else x) for x in xs])
    res = common_field(J.field.one if J.field.degree == 1 else J.field.gen, *fe)
    K = res[0]
    gen_img = res[1]
    emb = FieldEmbedding(J.field, K, gen_img) if J.field.degree > 1 else \
        FieldEmbedding(J.field, K, K.one * J.field.theta.as_rational())
    JK = J.embed(emb)
    moved = []
    it = iter(res[2:])
    for x in xs:
        if isinstance(x, FieldElement) and not x.is_rational():
            moved.append(next(it))
        else:
            moved.append(K(x.rational() if isinstance(x, FieldElement) else x))
    return (JK, *moved)


def j_scale(J: JTensor, r, s) -> JTensor:
    """Psi_{r,s}: x (x) y -> (r x) (x) (s y)."""
    J, r, s = _move(J, r, s)
    if r.is_zero() or s.is_zero():
        raise ValueError("scaling factors must be nonzero")
    Lr, Ls = r.multiplication_matrix(), s.multiplication_matrix()
    C = matmul(matmul(Lr, J.matrix), transpose(Ls))
    return JTensor(J.field, tuple(map(tuple, C)))


def j_cover_scale(J: JTensor, n: int) -> JTensor:
    if n < 1:
        raise ValueError("cover degree must be positive")
    return J.scaled(n)


# -- orbit invariants ------------------------------------------------------

def _ratio_field(basis: list[FieldElement], K: NumberField) -> FieldElement:
    if not basis:
        return K.one
    first = basis[0]
    return subfield_generated([x / first for x in basis[1:]])


@dataclass(frozen=True)
class JClassReport:
    rank: int
    width_ratio_generator: FieldElement
    height_ratio_generator: FieldElement
    normalized: JTensor

    @property
    def width_ratio_minpoly(self):
        return self.width_ratio_generator.minimal_polynomial

    @property
    def height_ratio_minpoly(self):
        return self.height_ratio_generator.minimal_polynomial

    # aliases following the matrix picture: rows carry widths, columns heights
    row_ratio_minpoly = width_ratio_minpoly
    column_ratio_minpoly = height_ratio_minpoly

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "width_ratio_field_minpoly": str(self.width_ratio_minpoly),
            "height_ratio_field_minpoly": str(self.height_ratio_minpoly),
            "normalized": self.normalized.to_json(),
        }


def j_class_report(J: JTensor) -> JClassReport:
    K = J.field
    wb, hb = J.width_basis, J.height_basis
    norm = J
    if wb and hb:
        norm = j_scale(J, wb[0].inverse(), hb[0].inverse())
    return JClassReport(J.rank, _ratio_field(wb, K), _ratio_field(hb, K), norm)


class Verdict(enum.Enum):
    EQUIVALENT = "EQUIVALENT"
    DISTINCT = "DISTINCT"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class JEquivalence:
    verdict: Verdict
    reason: str
    witness: tuple[FieldElement, FieldElement] | None = None
    details: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value, "reason": self.reason, **self.details}
        if self.witness is not None:
            out["witness"] = {"r": self.witness[0].pretty(), "s": self.witness[1].pretty(),
                              "r_approx": float(self.witness[0]), "s_approx": float(self.witness[1])}
        return out


def multiplier_space(source: list[FieldElement], target: list[FieldElement], K: NumberField) -> list[FieldElement]:
    """Basis of {r in K : r * span(source) is contained in span(target)}."""
    d = K.degree
    # rows annihilating span(target)
    T = [list(t.coords) for t in target]
    ann = nullspace(T, d) if T else [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    rows = []
    for x in source:
        Lx = x.multiplication_matrix()
        for a in ann:
            rows.append([sum((a[i] * Lx[i][j] for i in range(d)), Fraction(0)) for j in range(d)])
    basis = nullspace(rows, d) if rows else [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    return [K.element(b) for b in basis]


def _solve_second(C1, C2, r: FieldElement, s_basis: list[FieldElement]):
    """Find s in span(s_basis) with L_r C1 L_s^T = C2."""
    Lr = r.multiplication_matrix()
    A = matmul(Lr, C1)
    d = len(C1)
    mats = [matmul(A, transpose(s.multiplication_matrix())) for s in s_basis]
    M = [[m[i][j] for m in mats] for i in range(d) for j in range(d)]
    b = [C2[i][j] for i in range(d) for j in range(d)]
    sol = solve(M, b)
    if sol is None:
        return None
    s = sum((s_basis[t] * sol[t] for t in range(len(s_basis))), r.field.zero)
    return None if s.is_zero() else s


def _candidates(basis: list[FieldElement], limit: int = 40):
    yield from basis
    n = 0
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            for c in (1, -1, 2, -2):
                yield basis[i] + basis[j] * c
                n += 1
                if n > limit:
                    return


def j_equivalence(J1: JTensor, J2: JTensor, max_degree: int = 24) -> JEquivalence:
    """Decide whether J2 = Psi_{r,s}(J1) for real r, s, when it can be certified.

    Any such r maps the width span of J1 onto that of J2, so r lies in the field
    and in a computable multiplier space; likewise s. When either multiplier
    space is one-dimensional the remaining equation is linear and the answer is
    exact. Otherwise a bounded search may report INCONCLUSIVE.
    """
    if J1.rank != J2.rank:
        return JEquivalence(Verdict.DISTINCT, "tensor rank differs", details={"ranks": [J1.rank, J2.rank]})
    if J1.rank == 0:
        K = J1.field
        return JEquivalence(Verdict.EQUIVALENT, "both zero", (K.one, K.one))
    rep1, rep2 = j_class_report(J1), j_class_report(J2)
    details = {"rank": J1.rank,
               "width_ratio_fields": [str(rep1.width_ratio_minpoly), str(rep2.width_ratio_minpoly)],
               "height_ratio_fields": [str(rep1.height_ratio_minpoly), str(rep2.height_ratio_minpoly)]}
    if rep1.width_ratio_minpoly.degree != rep2.width_ratio_minpoly.degree:
        return JEquivalence(Verdict.DISTINCT, "width ratio fields have different degrees", details=details)
    if rep1.height_ratio_minpoly.degree != rep2.height_ratio_minpoly.degree:
        return JEquivalence(Verdict.DISTINCT, "height ratio fields have different degrees", details=details)
    if J1.field != J2.field and J1.field.degree * J2.field.degree > max_degree:
        return JEquivalence(Verdict.INCONCLUSIVE, "common field too large", details=details)
    A, B = to_common_field(J1, J2)
    K = A.field
    details["common_field_degree"] = K.degree
    ra, rb = j_class_report(A), j_class_report(B)
    if not same_subfield(ra.width_ratio_generator, rb.width_ratio_generator):
        return JEquivalence(Verdict.DISTINCT, "width ratio fields are different subfields", details=details)
    if not same_subfield(ra.height_ratio_generator, rb.height_ratio_generator):
        return JEquivalence(Verdict.DISTINCT, "height ratio fields are different subfields", details=details)
    R = multiplier_space(A.width_basis, B.width_basis, K)
    S = multiplier_space(A.height_basis, B.height_basis, K)
    details["multiplier_dimensions"] = [len(R), len(S)]
    if not R:
        return JEquivalence(Verdict.DISTINCT, "no field element carries one width span onto the other",
                            details=details)
    if not S:
        return JEquivalence(Verdict.DISTINCT, "no field element carries one height span onto the other",
                            details=details)
    C1, C2 = A.matrix, B.matrix
    # Psi_{r,s} with r -> q r, s -> s / q is the same map, so one r per line suffices
    if len(R) <= len(S):
        for r in _candidates(R):
            s = _solve_second(C1, C2, r, S)
            if s is not None:
                return JEquivalence(Verdict.EQUIVALENT, "witness found", (r, s), details)
        if len(R) == 1:
            return JEquivalence(Verdict.DISTINCT, "the only admissible width multiplier has no partner",
                                details=details)
    else:
        C1t, C2t = transpose(C1), transpose(C2)
        for s in _candidates(S):
            r = _solve_second(C1t, C2t, s, R)
            if r is not None:
                return JEquivalence(Verdict.EQUIVALENT, "witness found", (r, s), details)
        if len(S) == 1:
            return JEquivalence(Verdict.DISTINCT, "the only admissible height multiplier has no partner",
                                details=details)
    return JEquivalence(Verdict.INCONCLUSIVE, "bounded witness search failed", details=details)


def integer_multiple(J_cover: JTensor, J_base: JTensor, max_n: int = 1000) -> int | None:
    """The n with J_cover = n * J_base (as tensors in a common field), if it exists."""
    A, B = to_common_field(J_cover, J_base)
    ratio = None
    for ra, rb in zip(A.matrix, B.matrix):
        for x, y in zip(ra, rb):
            if y == 0:
                if x != 0:
                    return None
                continue
            q = x / y
            if ratio is None:
                ratio = q
            elif q != ratio:
                return None
    if ratio is None or ratio.denominator != 1 or not 1 <= ratio <= max_n:
        return None
    return int(ratio)

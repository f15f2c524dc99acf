"""Flat structure on a square complex from Perron-Frobenius eigendata.

Square (j, k), lying on a-curve j and b-curve k, becomes a rectangle of width
``widths[k]`` and height ``heights[j]``. Heights are the PF eigenvector of
N N^T normalised so the first entry is 1, and widths are N^T heights / sqrt(mu).
Everything lives in one field K = Q(mu, sqrt(mu)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import AlgebraicReal, FieldElement, NumberField, adjoin_sqrt
from .algebra.pf import pf_eigenvalue, pf_eigenvector
from .complex import SquareComplex


class DisconnectedConfiguration(ValueError):
    pass


def gram(N) -> list[list[int]]:
    """N N^T."""
    return [[sum(a * b for a, b in zip(r1, r2)) for r2 in N] for r1 in N]


def cogram(N) -> list[list[int]]:
    """N^T N."""
    cols = list(zip(*N))
    return [[sum(a * b for a, b in zip(c1, c2)) for c2 in cols] for c1 in cols]


@dataclass(frozen=True)
class FlatStructure:
    complex: SquareComplex
    mu: AlgebraicReal
    field: NumberField
    sqrt_mu: FieldElement
    heights: tuple[FieldElement, ...]
    widths: tuple[FieldElement, ...]

    @cached_property
    def square_curves(self) -> list[tuple[int, int]]:
        """(a-curve, b-curve) of each square."""
        cur = self.complex.curves
        out = [[0, 0] for _ in range(self.complex.squares)]
        for j, cyc in enumerate(cur.a_curves):
            for s, _ in cyc:
                out[s][0] = j
        for k, cyc in enumerate(cur.b_curves):
            for s, _ in cyc:
                out[s][1] = k
        return [tuple(p) for p in out]

    def dimensions(self, square: int) -> tuple[FieldElement, FieldElement]:
        """(width, height) of a square."""
        j, k = self.square_curves[square]
        return self.widths[k], self.heights[j]

    @property
    def mu_element(self) -> FieldElement:
        return self.sqrt_mu * self.sqrt_mu


def build_flat(c: SquareComplex) -> FlatStructure:
    N = c.incidence
    g = c.graph
    if not g.is_connected():
        comps = [" ".join(f"{t}{i + 1}" for t, i in comp) for comp in g.components()]
        raise DisconnectedConfiguration("intersection graph is disconnected: " + " | ".join(
            "{" + s + "}" for s in comps))
    G = gram(N)
    mu = pf_eigenvalue(G)
    v = pf_eigenvector(G, mu)
    F = v[0].field
    K, emb, root = adjoin_sqrt(F.gen if F.degree > 1 else F(mu.as_rational()))
    heights = tuple(emb(x) for x in v)
    inv_root = root.inverse()
    widths = tuple(
        sum((heights[j] * N[j][k] for j in range(len(N))), K.zero) * inv_root
        for k in range(len(N[0])))
    return FlatStructure(c, mu, K, root, heights, widths)


@dataclass(frozen=True)
class Cylinder:
    direction: str  # "a" (horizontal) or "b" (vertical)
    index: int
    height: FieldElement
    circumference: FieldElement


def cylinder_dimensions(f: FlatStructure) -> list[Cylinder]:
    """Height and circumference of each cylinder, the circumference checked two ways."""
    N = f.complex.incidence
    out = []
    for j, h in enumerate(f.heights):
        around = sum((f.widths[k] * N[j][k] for k in range(len(f.widths))), f.field.zero)
        if around != f.sqrt_mu * h:
            raise ArithmeticError(f"a-cylinder {j}: circumference mismatch")
        out.append(Cylinder("a", j, h, around))
    for k, w in enumerate(f.widths):
        around = sum((f.heights[j] * N[j][k] for j in range(len(f.heights))), f.field.zero)
        if around != f.sqrt_mu * w:
            raise ArithmeticError(f"b-cylinder {k}: circumference mismatch")
        out.append(Cylinder("b", k, w, around))
    return out


def area(f: FlatStructure) -> FieldElement:
    total = f.field.zero
    for s in range(f.complex.squares):
        w, h = f.dimensions(s)
        total = total + w * h
    return total


def pulled_back(base: FlatStructure, cover: SquareComplex, projection) -> "PulledBackStructure":
    """Give each cover square the dimensions of the base square it maps to."""
    return PulledBackStructure(base, cover, tuple(projection(s) for s in range(cover.squares)))


@dataclass(frozen=True)
class PulledBackStructure:
    base: FlatStructure
    complex: SquareComplex
    image: tuple[int, ...]

    @property
    def field(self) -> NumberField:
        return self.base.field

    def dimensions(self, square: int):
        return self.base.dimensions(self.image[square])

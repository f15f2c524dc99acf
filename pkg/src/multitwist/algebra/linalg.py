"""Exact Gaussian elimination over Q or over a number field.

Entries may be ``Fraction`` or ``FieldElement``; anything supporting ``+ - * /``
and ``== 0`` works.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _is_zero(x) -> bool:
    return x == 0


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = [list(r) for r in rows]
    if not A:
        return A, []
    m, n = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if not _is_zero(A[i][c])), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(m):
            if i != r and not _is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None, one=Fraction(1), zero=Fraction(0)) -> list[list]:
    """Basis of {x : A x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0])
    R, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(A: Sequence[Sequence], b: Sequence) -> list | None:
    """One solution of A x = b, or None when inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if n in pivots:
        return None
    zero = b[0] * 0 if b else Fraction(0)
    x = [zero] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return x


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], v: Sequence) -> list:
    return [sum((a * x for a, x in zip(row, v)), 0 * v[0]) for row in A]


def span_basis(vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    """Canonical (reduced echelon) basis of the span of rational vectors."""
    vs = [list(v) for v in vectors if any(x != 0 for x in v)]
    if not vs:
        return []
    return rref(vs)[0]


def in_span(basis: Sequence[Sequence], v: Sequence) -> bool:
    if not any(x != 0 for x in v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(v)]) == len(basis)


def subspace_intersection(U: Sequence[Sequence], W: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of span(U) ∩ span(W) for rational vectors."""
    if not U or not W:
        return []
    # x in both iff x = sum a_i u_i = sum b_j w_j
    cols = [list(u) for u in U] + [[-x for x in w] for w in W]
    M = transpose(cols)
    ker = nullspace(M, len(cols))
    out = []
    for k in ker:
        a = k[: len(U)]
        out.append([sum((ai * u[t] for ai, u in zip(a, U)), Fraction(0)) for t in range(len(U[0]))])
    return span_basis(out)

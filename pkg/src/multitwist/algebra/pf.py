"""Perron-Frobenius eigendata of nonnegative integer matrices, exactly."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .field import FieldElement, NumberField
from .linalg import nullspace
from .poly import charpoly
from .real import AlgebraicReal, isolate_real_roots


class PerronFrobeniusError(ValueError):
    """Raised when a matrix fails a Perron-Frobenius precondition."""


def _bool_mul(A, B):
    n = len(A)
    return [[any(A[i][k] and B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def check_primitive(M: Sequence[Sequence[int]]) -> None:
    """Raise PerronFrobeniusError unless M is square, nonnegative and primitive."""
    n = len(M)
    if n == 0 or any(len(row) != n for row in M):
        raise PerronFrobeniusError("matrix is not square")
    for i, row in enumerate(M):
        for j, v in enumerate(row):
            if Fraction(v) != int(Fraction(v)):
                raise PerronFrobeniusError(f"entry ({i},{j}) is not an integer")
            if v < 0:
                raise PerronFrobeniusError(f"entry ({i},{j}) = {v} is negative")
    B = [[v > 0 for v in row] for row in M]
    # Wielandt: a primitive n x n matrix has M^k > 0 for k = (n-1)^2 + 1
    P = B
    for _ in range((n - 1) ** 2):
        if all(all(r) for r in P):
            return
        P = _bool_mul(P, B)
    if all(all(r) for r in P):
        return
    # distinguish reducible from imprimitive for the diagnostic
    R = [[B[i][j] or i == j for j in range(n)] for i in range(n)]
    Q = R
    for _ in range(n):
        Q = _bool_mul(Q, R)
    if all(all(r) for r in Q):
        raise PerronFrobeniusError("matrix is irreducible but not primitive (periodic)")
    raise PerronFrobeniusError("matrix is reducible: no power is strictly positive")


def pf_eigenvalue(M: Sequence[Sequence[int]]) -> AlgebraicReal:
    """The Perron-Frobenius eigenvalue of a primitive nonnegative integer matrix."""
    check_primitive(M)
    roots = isolate_real_roots(charpoly(M))
    return roots[-1]


def pf_eigenvector(M: Sequence[Sequence[int]], mu) -> list[FieldElement]:
    """Positive eigenvector for ``mu`` with first entry 1, over the field of ``mu``.

    ``mu`` may be an AlgebraicReal (the field Q(mu) is used) or a FieldElement.
    """
    if isinstance(mu, AlgebraicReal):
        K = NumberField(mu)
        m = K.gen
    else:
        m = mu
        K = mu.field
    n = len(M)
    rows = [[K(M[i][j]) - (m if i == j else 0) for j in range(n)] for i in range(n)]
    ker = nullspace(rows, n, one=K.one, zero=K.zero)
    if not ker:
        raise PerronFrobeniusError("mu is not an eigenvalue of the matrix")
    if len(ker) > 1:
        raise PerronFrobeniusError("eigenspace of mu is not one-dimensional")
    v = ker[0]
    if v[0].is_zero():
        raise PerronFrobeniusError("eigenvector has zero first entry")
    inv = v[0].inverse()
    v = [x * inv for x in v]
    if any(x.sign() <= 0 for x in v):
        raise PerronFrobeniusError("eigenvector is not positive; mu is not the PF eigenvalue")
    for i in range(n):
        res = sum((v[j] * M[i][j] for j in range(n)), K.zero) - m * v[i]
        if not res.is_zero():
            raise PerronFrobeniusError("nonzero residual in M v = mu v")
    return v

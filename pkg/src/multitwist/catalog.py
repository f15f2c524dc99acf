"""Named curve configurations as square complexes.

Every family is described by its intersection matrix N together with a cyclic
order of squares along each curve. Squares are numbered row-major over the
nonzero entries of N, so curve order (by least square) reproduces N's row and
column order. Regular vertices are marked as punctures except for the
FillingPairSix family, which lives on closed surfaces.

The cyclic orders and half-turns below were found by ``scripts/search_catalog.py``.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .complex import SquareComplex, from_curves

# frozen search results: b-curve border order and directions for one-a-one-b
# pairs (the a-curve visits squares 0..n-1 eastward)
_FILLING_PAIR_RIBBONS = {
    2: ([0, 1, 3, 2], [1, 1, -1, -1]),
    4: ([0, 3, 6, 5, 8, 7, 11, 9, 1, 2, 10, 4], [1] * 12),
}
_FILLING_PAIR_SIX_RIBBONS = {
    2: ([0, 1, 2, 3, 5, 4], [1, 1, 1, 1, -1, -1]),
    3: ([0, 5, 4, 1, 7, 6, 8, 2, 3], [1, -1, -1, 1, -1, -1, -1, 1, 1]),
    4: ([0, 5, 1, 6, 2, 7, 3, 10, 4, 9, 11, 8], [1, -1, -1, 1, -1, -1, 1, 1, -1, -1, -1, 1]),
    5: ([0, 8, 11, 14, 13, 7, 4, 12, 1, 5, 9, 2, 3, 6, 10],
        [1, -1, -1, -1, -1, -1, -1, 1, -1, -1, -1, 1, 1, -1, 1]),
}


class UnknownConfiguration(KeyError):
    pass


# -- intersection matrices -------------------------------------------------

def matrix_A(n: int) -> list[list[int]]:
    """A_n path. Even n: square lower-bidiagonal; odd n: |a| = (n-1)/2 rows, one more column."""
    m = n // 2
    if n % 2 == 0:
        return [[1 if j - k in (0, 1) else 0 for k in range(m)] for j in range(m)]
    return [[1 if k - j in (0, 1) else 0 for k in range(m + 1)] for j in range(m)]


def matrix_D(n: int) -> list[list[int]]:
    """D_n: leaves a1, a2 on b1, then the path b1 - a3 - b2 - a4 - ..."""
    chain = n - 3
    na, nb = 2 + (chain + 1) // 2, 1 + chain // 2
    N = [[0] * nb for _ in range(na)]
    N[0][0] = N[1][0] = 1
    for i in range(2, na):
        N[i][i - 2] = 1
        if i - 1 < nb:
            N[i][i - 1] = 1
    return N


def _tree_matrix(edges: list[tuple]) -> list[list[int]]:
    """Intersection matrix of a bipartite tree given as (a-vertex, b-vertex) edges."""
    rows, cols = [], []
    for a, b in edges:
        if a not in rows:
            rows.append(a)
        if b not in cols:
            cols.append(b)
    N = [[0] * len(cols) for _ in rows]
    for a, b in edges:
        N[rows.index(a)][cols.index(b)] += 1
    first = [min(j for j in range(len(rows)) if N[j][k]) for k in range(len(cols))]
    order = sorted(range(len(cols)), key=lambda k: (first[k], k))
    return [[row[k] for k in order] for row in N]


def _star(center: str, arms: tuple[int, ...]) -> list[tuple]:
    edges = []
    for i, length in enumerate(arms):
        prev = ("center", center)
        for t in range(length):
            colour = "b" if prev[-1] == "a" else "a"
            v = (i, t, colour)
            edges.append((prev, v) if prev[-1] == "a" else (v, prev))
            prev = v
    return edges


def matrix_E(n: int) -> list[list[int]]:
    """E_n: a1 - b1 - a2 with a leaf b2 on a2, then the arm a2 - b3 - a3 - b4 - ...

    Rows ordered so that NN^T has diagonal (1, 3, 2, ..., 2, *).
    """
    arm = n - 4
    na, nb = 2 + arm // 2, 2 + (arm + 1) // 2
    N = [[0] * nb for _ in range(na)]
    N[0][0] = N[1][0] = N[1][1] = 1
    for i in range(arm):
        # vertex i of the long arm is b_{2 + i//2} for even i, a_{2 + i//2} for odd i
        if i % 2 == 0:
            N[1 + i // 2][2 + i // 2] = 1
        else:
            N[2 + i // 2][2 + i // 2] = 1
    return N


def matrix_P(n2: int) -> list[list[int]]:
    """P_{2n}: the 2n-cycle; P_2 is a doubled edge."""
    n = n2 // 2
    if n == 1:
        return [[2]]
    if n == 2:
        return [[1, 1], [1, 1]]
    return [[1 if (k - j) % n in (0, 1) else 0 for k in range(n)] for j in range(n)]


def matrix_Q(n: int) -> list[list[int]]:
    """Q_n: the affine diagram with two forks joined by a path, n vertices."""
    k = n - 4  # path vertices between the forks
    chain = [("c", i, "b" if i % 2 == 0 else "a") for i in range(k)]
    edges = []

    def add(u, v):
        edges.append((u, v) if u[-1] == "a" else (v, u))

    def opposite(v):
        return "a" if v[-1] == "b" else "b"

    for i in range(k - 1):
        add(chain[i], chain[i + 1])
    for t in range(2):
        add(chain[0], ("l0", t, opposite(chain[0])))
    for t in range(2):
        add(chain[-1], ("l1", t, opposite(chain[-1])))
    return _tree_matrix(edges)


def matrix_R(n: int) -> list[list[int]]:
    arms = {7: (2, 2, 2), 8: (1, 3, 3), 9: (1, 2, 5)}[n]
    return _tree_matrix(_star("a", arms))


# -- complexes -------------------------------------------------------------

def complex_from_matrix(N: list[list[int]], name: str | None = None,
                        flip_b: set[int] = frozenset()) -> SquareComplex:
    """Squares row-major over N; curves in increasing square order.

    ``flip_b`` lists b-curves whose final square is traversed southward.
    """
    entries = [(j, k) for j, row in enumerate(N) for k, m in enumerate(row) for _ in range(m)]
    a = [[(s, 1) for s, (j, _) in enumerate(entries) if j == jj] for jj in range(len(N))]
    b = []
    for kk in range(len(N[0])):
        cyc = [(s, 1) for s, (_, k) in enumerate(entries) if k == kk]
        if kk in flip_b:
            cyc[-1] = (cyc[-1][0], -1)
        b.append(cyc)
    return from_curves(a, b, name)


def ribbon_pair(border: list[int], dirs: list[int], name: str | None = None) -> SquareComplex:
    n = len(border)
    return from_curves([[(i, 1) for i in range(n)]], [list(zip(border, dirs))], name)


def _affine_pair(n: int, name: str) -> SquareComplex:
    from .complex import origami

    a = 1 + n // 2
    return origami([(i + 1) % n for i in range(n)], [(a * i + 1) % n for i in range(n)], name)


def _mark_regular(c: SquareComplex) -> SquareComplex:
    return c.with_marked(c.regular_vertices())


_NAME = re.compile(r"^(A|D|E|P|Q|R|FillingPairSix|FillingPair)\(?(\d+)\)?$")


def parse_name(name: str) -> tuple[str, int]:
    m = _NAME.match(name.replace("_", "").replace(" ", ""))
    if not m:
        raise UnknownConfiguration(f"unknown configuration {name!r}")
    return m.group(1), int(m.group(2))


def canonical_name(family: str, n: int) -> str:
    if family.startswith("Filling"):
        return f"{family}({n})"
    return f"{family}{n}"


def _check_range(family: str, n: int) -> None:
    ok = {
        "A": n >= 2,
        "D": n >= 4,
        "E": n >= 6,
        "P": n >= 2 and n % 2 == 0,
        "Q": n >= 5,
        "R": n in (7, 8, 9),
        "FillingPair": n >= 2 and (n % 2 == 1 or n in _FILLING_PAIR_RIBBONS),
        "FillingPairSix": n in _FILLING_PAIR_SIX_RIBBONS,
    }[family]
    if not ok:
        raise UnknownConfiguration(f"index {n} out of range for family {family}")


@lru_cache(maxsize=None)
def catalog(name: str) -> SquareComplex:
    """The catalog complex for a name such as ``A4``, ``P6``, ``FillingPair(3)``."""
    if name in ("torus", "T"):
        from .complex import square_torus
        return square_torus()
    family, n = parse_name(name)
    _check_range(family, n)
    label = canonical_name(family, n)
    if family == "FillingPair":
        if n in _FILLING_PAIR_RIBBONS:
            c = ribbon_pair(*_FILLING_PAIR_RIBBONS[n], name=label)
        else:
            c = _affine_pair(4 * (n - 1), label)
        return _mark_regular(c)
    if family == "FillingPairSix":
        return ribbon_pair(*_FILLING_PAIR_SIX_RIBBONS[n], name=label)
    if family == "P":
        half = n // 2
        N = matrix_P(n)
        # an odd cycle needs one half-turn to close up the foliation
        flips = {half - 1} if half >= 3 and half % 2 == 1 else set()
        return _mark_regular(complex_from_matrix(N, label, flips))
    N = {"A": matrix_A, "D": matrix_D, "E": matrix_E, "Q": matrix_Q, "R": matrix_R}[family](n)
    return _mark_regular(complex_from_matrix(N, label))


def catalog_names(max_index: int = 11) -> list[str]:
    names = [f"A{n}" for n in range(2, max_index + 1)]
    names += [f"D{n}" for n in range(4, max_index + 1)]
    names += [f"E{n}" for n in range(6, max_index + 1)]
    names += [f"P{n}" for n in range(2, 13, 2)]
    names += [f"Q{n}" for n in range(5, max_index + 1)]
    names += ["R7", "R8", "R9"]
    names += [f"FillingPair({g})" for g in range(2, 6)]
    names += [f"FillingPairSix({g})" for g in sorted(_FILLING_PAIR_SIX_RIBBONS)]
    return names

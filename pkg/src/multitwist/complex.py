"""Square complexes: unit squares glued along sides.

A side is ``(square, label)`` with label in N, E, S, W. Sides pair up along
the same axis: E/W sides with E/W sides, N/S sides with N/S sides. A gluing of
opposite labels (E to W, N to S) is a translation; a gluing of equal labels
(E to E, ...) is a half-turn, which reverses the edge parameter. Both are
orientation preserving, so every complex is an oriented surface with a
half-translation structure.

The a-curves are the horizontal cylinder cores and the b-curves the vertical
ones; each square is one intersection point of an a-curve with a b-curve.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

SIDES = ("N", "E", "S", "W")
CORNERS = ("NE", "NW", "SE", "SW")
HEADER = "mtl-complex v1"

Side = tuple[int, str]
Corner = tuple[int, str]

# counterclockwise rotation around a vertex leaves a corner through this side
_EXIT = {"NE": ("E", 1), "NW": ("N", 0), "SW": ("W", 0), "SE": ("S", 1)}
# corner of a square at a given side and endpoint parameter
_CORNER_AT = {
    ("E", 0): "SE", ("E", 1): "NE",
    ("W", 0): "SW", ("W", 1): "NW",
    ("N", 0): "NW", ("N", 1): "NE",
    ("S", 0): "SW", ("S", 1): "SE",
}
_AXIS = {"N": "v", "S": "v", "E": "h", "W": "h"}


class InvalidComplex(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self):
        return f"{self.code}: {self.message}"


@dataclass(frozen=True)
class Gluing:
    """Side ``a`` glued to side ``b``; ``flip`` marks a half-turn."""

    a: Side
    b: Side
    flip: bool

    def to_json(self) -> dict:
        return {"from": list(self.a), "to": list(self.b), "flip": self.flip}

    @classmethod
    def from_json(cls, d: dict) -> "Gluing":
        return cls((int(d["from"][0]), str(d["from"][1])), (int(d["to"][0]), str(d["to"][1])), bool(d["flip"]))


@dataclass(frozen=True)
class MultiCurveLabels:
    """Curves as cyclic sequences of (square, direction), direction +1 or -1.

    For a-curves +1 means moving east; for b-curves +1 means moving north.
    """

    a_curves: tuple[tuple[tuple[int, int], ...], ...]
    b_curves: tuple[tuple[tuple[int, int], ...], ...]

    def a_squares(self, j: int) -> list[int]:
        return [s for s, _ in self.a_curves[j]]

    def b_squares(self, k: int) -> list[int]:
        return [s for s, _ in self.b_curves[k]]


@dataclass(frozen=True)
class IntersectionGraph:
    """Bipartite multigraph with one vertex per curve and N[j][k] edges a_j -- b_k."""

    n_a: int
    n_b: int
    matrix: tuple[tuple[int, ...], ...]

    @property
    def vertices(self) -> list[tuple[str, int]]:
        return [("a", j) for j in range(self.n_a)] + [("b", k) for k in range(self.n_b)]

    def edges(self) -> list[tuple[tuple[str, int], tuple[str, int], int]]:
        return [(("a", j), ("b", k), m) for j, row in enumerate(self.matrix)
                for k, m in enumerate(row) if m]

    def components(self) -> list[list[tuple[str, int]]]:
        adj: dict = {v: set() for v in self.vertices}
        for u, w, _ in self.edges():
            adj[u].add(w)
            adj[w].add(u)
        seen, comps = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in sorted(adj[x]):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def describe(self) -> str:
        parts = [f"a{j + 1}-b{k + 1}" + (f" x{m}" if m > 1 else "") for (_, j), (_, k), m in self.edges()]
        return ", ".join(parts)


@dataclass(frozen=True)
class SquareComplex:
    squares: int
    gluings: tuple[Gluing, ...]
    marked: frozenset = field(default_factory=frozenset)
    name: str | None = field(default=None, compare=False)

    # -- structure -----------------------------------------------------
    @cached_property
    def partner(self) -> dict[Side, tuple[Side, bool]]:
        out = {}
        for g in self.gluings:
            out[g.a] = (g.b, g.flip)
            out[g.b] = (g.a, g.flip)
        return out

    @cached_property
    def gluing_index(self) -> dict[Side, tuple[int, int]]:
        """side -> (gluing index, +1 if the side is the gluing's ``a`` end else -1)."""
        out = {}
        for i, g in enumerate(self.gluings):
            out[g.a] = (i, 1)
            out[g.b] = (i, -1)
        return out

    def rotate(self, corner: Corner) -> Corner:
        """Next corner counterclockwise around the same vertex."""
        sq, c = corner
        side, p = _EXIT[c]
        (sq2, side2), flip = self.partner[(sq, side)]
        return (sq2, _CORNER_AT[(side2, 1 - p if flip else p)])

    def crossing(self, corner: Corner) -> tuple[int, int]:
        """Gluing crossed when rotating counterclockwise out of ``corner``."""
        sq, c = corner
        return self.gluing_index[(sq, _EXIT[c][0])]

    @cached_property
    def vertices(self) -> list[tuple[Corner, ...]]:
        """Corner orbits, each starting at its minimal corner; sorted."""
        self._require_valid()
        seen = set()
        out = []
        for sq in range(self.squares):
            for c in CORNERS:
                start = (sq, c)
                if start in seen:
                    continue
                orbit = [start]
                seen.add(start)
                nxt = self.rotate(start)
                while nxt != start:
                    orbit.append(nxt)
                    seen.add(nxt)
                    nxt = self.rotate(nxt)
                m = orbit.index(min(orbit))
                out.append(tuple(orbit[m:] + orbit[:m]))
        out.sort()
        return out

    @cached_property
    def vertex_of(self) -> dict[Corner, Corner]:
        return {c: orb[0] for orb in self.vertices for c in orb}

    def vertex_id(self, corner: Corner) -> Corner:
        return self.vertex_of[tuple(corner)]

    def prongs(self, vertex: Corner) -> int:
        orb = next(o for o in self.vertices if o[0] == vertex)
        return len(orb) // 2

    @cached_property
    def curves(self) -> MultiCurveLabels:
        self._require_valid()
        return MultiCurveLabels(self._trace("h"), self._trace("v"))

    def _trace(self, axis: str):
        fwd, back = ("E", "W") if axis == "h" else ("N", "S")
        seen = set()
        curves = []
        for sq in range(self.squares):
            if sq in seen:
                continue
            seq = []
            state = (sq, 1)
            while True:
                seq.append(state)
                seen.add(state[0])
                s, d = state
                (s2, side2), _ = self.partner[(s, fwd if d > 0 else back)]
                state = (s2, 1 if side2 == back else -1)
                if state[0] == sq:
                    break
            curves.append(tuple(seq))
        return tuple(curves)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        cur = self.curves
        where_b = {}
        for k, cyc in enumerate(cur.b_curves):
            for s, _ in cyc:
                where_b[s] = k
        rows = []
        for cyc in cur.a_curves:
            row = [0] * len(cur.b_curves)
            for s, _ in cyc:
                row[where_b[s]] += 1
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def graph(self) -> IntersectionGraph:
        N = self.incidence
        return IntersectionGraph(len(N), len(N[0]) if N else 0, N)

    @cached_property
    def delta(self) -> dict[int, int]:
        counts = Counter(len(o) // 2 for o in self.vertices)
        counts.pop(2, None)
        return dict(sorted(counts.items()))

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - self.squares

    @property
    def punctured_euler_characteristic(self) -> int:
        return self.euler_characteristic - len(self.marked)

    @property
    def genus(self):
        chi = self.euler_characteristic
        return 1 - chi // 2 if chi % 2 == 0 else 1 - chi / 2

    def is_translation(self) -> bool:
        return not any(g.flip for g in self.gluings)

    def is_connected(self) -> bool:
        return self.graph.is_connected()

    def regular_vertices(self) -> list[Corner]:
        return [o[0] for o in self.vertices if len(o) == 4]

    def with_marked(self, marked: Iterable[Corner], name: str | None = None) -> "SquareComplex":
        c = SquareComplex(self.squares, self.gluings, frozenset(), name or self.name)
        ids = frozenset(c.vertex_id(m) for m in marked)
        return SquareComplex(self.squares, self.gluings, ids, name or self.name)

    def renamed(self, name: str) -> "SquareComplex":
        return SquareComplex(self.squares, self.gluings, self.marked, name)

    # -- validation ----------------------------------------------------
    @cached_property
    def violations(self) -> list[Violation]:
        return _violations(self)

    def is_valid(self) -> bool:
        return not self.violations

    def _require_valid(self):
        v = self.violations
        if v:
            raise InvalidComplex(v)

    # -- serialization -------------------------------------------------
    def to_json(self) -> dict:
        d = {"squares": self.squares, "gluings": [g.to_json() for g in self.gluings],
             "marked": [list(m) for m in sorted(self.marked)]}
        if self.name:
            d["name"] = self.name
        return d

    def dumps(self) -> str:
        return HEADER + "\n" + json.dumps(self.to_json(), indent=1) + "\n"

    @classmethod
    def from_json(cls, d: dict) -> "SquareComplex":
        gl = tuple(Gluing.from_json(g) for g in d["gluings"])
        marked = [tuple(m) for m in d.get("marked", [])]
        base = cls(int(d["squares"]), gl, frozenset((int(s), str(c)) for s, c in marked), d.get("name"))
        if base.violations:
            return base
        return base.with_marked(base.marked) if base.marked else base

    @classmethod
    def loads(cls, text: str) -> "SquareComplex":
        head, _, body = text.partition("\n")
        if head.strip() != HEADER:
            raise ValueError(f"missing header {HEADER!r}")
        return cls.from_json(json.loads(body))


def _violations(c: SquareComplex) -> list[Violation]:
    out = []
    if not isinstance(c.squares, int) or c.squares < 1:
        return [Violation("square count", "need at least one square")]
    seen: dict = {}
    for i, g in enumerate(c.gluings):
        for s in (g.a, g.b):
            sq, lab = s
            if lab not in SIDES or not (0 <= sq < c.squares):
                out.append(Violation("bad side", f"gluing {i} names nonexistent side {s}"))
                continue
            if s in seen:
                out.append(Violation("side glued twice", f"side {s} in gluings {seen[s]} and {i}"))
            seen[s] = i
        if g.a == g.b:
            out.append(Violation("self-glued side", f"gluing {i} glues {g.a} to itself"))
        if g.a[1] in SIDES and g.b[1] in SIDES:
            if _AXIS[g.a[1]] != _AXIS[g.b[1]]:
                out.append(Violation("axis mismatch", f"gluing {i} joins {g.a[1]} to {g.b[1]}"))
            elif g.flip != (g.a[1] == g.b[1]):
                kind = "half-turn" if g.a[1] == g.b[1] else "translation"
                out.append(Violation("flip mismatch", f"gluing {i} joins {g.a[1]} to {g.b[1]}, which is a {kind}"))
    if out:
        return out
    for sq in range(c.squares):
        for lab in SIDES:
            if (sq, lab) not in seen:
                out.append(Violation("open side", f"side {(sq, lab)} is not glued"))
    if out:
        return out
    # corner cycles and marked vertices
    probe = SquareComplex(c.squares, c.gluings)
    try:
        verts = _orbits_unchecked(probe)
    except KeyError as e:  # pragma: no cover - guarded by the checks above
        return [Violation("open side", str(e))]
    for o in verts:
        if len(o) % 2:
            out.append(Violation("odd corner cycle", f"vertex at {o[0]} has {len(o)} corners"))
    corners = {x for o in verts for x in o}
    for m in c.marked:
        if tuple(m) not in corners:
            out.append(Violation("bad marked vertex", f"{m} is not a corner"))
    return out


def _orbits_unchecked(c: SquareComplex):
    seen, out = set(), []
    for sq in range(c.squares):
        for cn in CORNERS:
            start = (sq, cn)
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            nxt = c.rotate(start)
            while nxt != start:
                orbit.append(nxt)
                seen.add(nxt)
                nxt = c.rotate(nxt)
            out.append(orbit)
    return out


# -- operations ------------------------------------------------------------

def validate(c: SquareComplex) -> list[Violation]:
    """All violated invariants; empty when valid."""
    return list(c.violations)


def incidence_graph(c: SquareComplex) -> tuple[MultiCurveLabels, tuple[tuple[int, ...], ...], IntersectionGraph]:
    c._require_valid()
    return c.curves, c.incidence, c.graph


def singularity_data(c: SquareComplex) -> dict[int, int]:
    c._require_valid()
    return dict(c.delta)


def genus_and_euler(c: SquareComplex) -> tuple:
    c._require_valid()
    return c.genus, c.euler_characteristic


def gauss_bonnet_defect(c: SquareComplex) -> int:
    """sum (n-2) delta_n + 2 chi, which vanishes on every valid complex."""
    return sum((n - 2) * m for n, m in c.delta.items()) + 2 * c.euler_characteristic


def format_delta(delta: dict[int, int]) -> str:
    if not delta:
        return "0"
    return " + ".join(f"{m}e_{n}" if m > 1 else f"e_{n}" for n, m in sorted(delta.items()))


# -- constructors ----------------------------------------------------------

def from_curves(a_curves: Sequence[Sequence[tuple[int, int]]],
                b_curves: Sequence[Sequence[tuple[int, int]]],
                name: str | None = None) -> SquareComplex:
    """Glue squares so that the given cyclic sequences are the curves.

    Each curve is a cyclic list of ``(square, direction)``; every square must
    appear once among the a-curves and once among the b-curves.
    """
    gluings = []
    for curves, fwd, back in ((a_curves, "E", "W"), (b_curves, "N", "S")):
        for cyc in curves:
            for i, (s, d) in enumerate(cyc):
                t, e = cyc[(i + 1) % len(cyc)]
                exit_side = fwd if d > 0 else back
                entry_side = back if e > 0 else fwd
                gluings.append(Gluing((s, exit_side), (t, entry_side), exit_side == entry_side))
    n = 1 + max(max(s for cyc in a_curves for s, _ in cyc), max(s for cyc in b_curves for s, _ in cyc))
    return SquareComplex(n, tuple(gluings), frozenset(), name)


def origami(r: Sequence[int], u: Sequence[int], name: str | None = None) -> SquareComplex:
    """Translation surface with square i's east neighbour r[i] and north neighbour u[i]."""
    gl = [Gluing((i, "E"), (r[i], "W"), False) for i in range(len(r))]
    gl += [Gluing((i, "N"), (u[i], "S"), False) for i in range(len(u))]
    return SquareComplex(len(r), tuple(gl), frozenset(), name)


def square_torus() -> SquareComplex:
    return origami([0], [0], "torus")


# -- freeness --------------------------------------------------------------

def dynkin_type(component_edges: list[tuple], vertices: list) -> str | None:
    """'A', 'D', 'E6', 'E7', 'E8' or 'E' for simply-laced trees; None otherwise."""
    if any(m != 1 for *_, m in component_edges):
        return None
    if len(component_edges) != len(vertices) - 1:
        return None
    deg = Counter()
    adj: dict = {v: [] for v in vertices}
    for u, w, _ in component_edges:
        deg[u] += 1
        deg[w] += 1
        adj[u].append(w)
        adj[w].append(u)
    big = [v for v in vertices if deg[v] >= 3]
    if not big:
        return "A"
    if len(big) > 1 or deg[big[0]] > 3:
        return None
    center = big[0]
    arms = []
    for nb in adj[center]:
        length, prev, cur = 1, center, nb
        while deg[cur] == 2:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return "D"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{arms[2] + 4}"
    return None


def is_free_by_graph(g: IntersectionGraph) -> bool:
    """True iff some component is not among A_j, D_j, E_6, E_7, E_8."""
    edges = g.edges()
    for comp in g.components():
        cs = set(comp)
        ce = [e for e in edges if e[0] in cs]
        if dynkin_type(ce, comp) is None:
            return True
    return False

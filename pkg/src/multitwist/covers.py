"""Finite covers of square complexes given by sheet permutations on gluings.

Cover square ``sheet * m + s`` lies over base square ``s`` (m = base square
count). Crossing base gluing g from its ``a`` side to its ``b`` side moves from
sheet i to sheet sigma_g(i). Permutations are 0-based in memory and 1-based in
files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Sequence

from .algebra import charpoly, common_field
from .complex import Gluing, SquareComplex
from .flat import build_flat, cogram, pulled_back
from .jinvariant import Verdict, j_cover_scale, j_equivalence, j_of_flat
from .twist import Classification, TwistWord, classify, expansion_factor


class CoverError(ValueError):
    pass


Perm = tuple[int, ...]


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _compose(p: Perm, q: Perm) -> Perm:
    """p then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def _inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


@dataclass(frozen=True)
class CoverSpec:
    degree: int
    monodromy: dict[int, Perm] = field(default_factory=dict)  # gluing index -> permutation

    def __post_init__(self):
        if self.degree < 1:
            raise CoverError("cover degree must be positive")
        for g, p in self.monodromy.items():
            if sorted(p) != list(range(self.degree)):
                raise CoverError(f"gluing {g}: {list(p)} is not a permutation of 0..{self.degree - 1}")

    def perm(self, g: int) -> Perm:
        return tuple(self.monodromy.get(g, _identity(self.degree)))

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "monodromy": {str(g): [i + 1 for i in p] for g, p in sorted(self.monodromy.items())}}

    @classmethod
    def from_json(cls, d: dict) -> "CoverSpec":
        n = int(d["degree"])
        mono = {}
        for g, p in d.get("monodromy", {}).items():
            img = [int(i) - 1 for i in p]
            if sorted(img) != list(range(n)):
                raise CoverError(f"gluing {g}: {p} is not a permutation of 1..{n}")
            mono[int(g)] = tuple(img)
        return cls(n, mono)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def loads(cls, text: str) -> "CoverSpec":
        return cls.from_json(json.loads(text))


def _check_spec(c: SquareComplex, spec: CoverSpec) -> None:
    for g in spec.monodromy:
        if not 0 <= g < len(c.gluings):
            raise CoverError(f"gluing index {g} out of range (complex has {len(c.gluings)} gluings)")


def is_connected_cover(c: SquareComplex, spec: CoverSpec) -> bool:
    """Whether every (square, sheet) pair is reachable through lifted gluings.

    This is transitivity of the monodromy of loops in the base, which is
    weaker than transitivity of the group the gluing permutations generate.
    """
    n, m = spec.degree, c.squares
    adj: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for gi, g in enumerate(c.gluings):
        p = spec.perm(gi)
        for i in range(n):
            u, v = (g.a[0], i), (g.b[0], p[i])
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
    start = (0, 0)
    seen, stack = {start}, [start]
    while stack:
        u = stack.pop()
        for v in adj.get(u, ()):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n * m


def vertex_holonomy(c: SquareComplex, spec: CoverSpec, vertex: tuple) -> Perm:
    """Sheet permutation picked up by one counterclockwise loop around a base vertex."""
    orbit = next(o for o in c.vertices if o[0] == vertex)
    h = _identity(spec.degree)
    for corner in orbit:
        g, end = c.crossing(corner)
        p = spec.perm(g)
        h = _compose(h, p if end > 0 else _inverse(p))
    return h


def branched_vertices(c: SquareComplex, spec: CoverSpec) -> list[tuple]:
    ident = _identity(spec.degree)
    return [o[0] for o in c.vertices if vertex_holonomy(c, spec, o[0]) != ident]


def build_cover(c: SquareComplex, spec: CoverSpec, allow_branching: bool = False,
                name: str | None = None) -> SquareComplex:
    """The cover as a square complex; branching is only allowed at marked vertices by default."""
    _check_spec(c, spec)
    if not c.is_connected():
        raise CoverError("base complex is disconnected")
    if not is_connected_cover(c, spec):
        raise CoverError("disconnected cover: monodromy is not transitive")
    bad = [v for v in branched_vertices(c, spec) if v not in c.marked]
    if bad and not allow_branching:
        raise CoverError(f"cover branches at unmarked vertices {bad}")
    n, m = spec.degree, c.squares
    gl = []
    for gi, g in enumerate(c.gluings):
        p = spec.perm(gi)
        for i in range(n):
            gl.append(Gluing((i * m + g.a[0], g.a[1]), (p[i] * m + g.b[0], g.b[1]), g.flip))
    cover = SquareComplex(n * m, tuple(gl), frozenset(), name or _cover_name(c, n))
    marked = [(i * m + s, corner) for v in c.marked
              for (s, corner) in next(o for o in c.vertices if o[0] == v) for i in range(n)]
    return cover.with_marked(marked) if marked else cover


def _cover_name(c: SquareComplex, n: int) -> str | None:
    return f"{c.name}~{n}" if c.name and n > 1 else c.name


def cyclic_cover_from_cut(c: SquareComplex, cut: Iterable[int], n: int) -> CoverSpec:
    """Cyclic n-fold cover: the shift i -> i+1 on every cut gluing."""
    cut = sorted(set(cut))
    if not cut:
        raise CoverError("cut must be nonempty")
    shift = tuple((i + 1) % n for i in range(n))
    spec = CoverSpec(n, {g: shift for g in cut})
    _check_spec(c, spec)
    if not is_connected_cover(c, spec):
        raise CoverError("disconnected cover")
    return spec


# -- lifting curves ----------------------------------------------------------

@dataclass(frozen=True)
class CurveLift:
    cover_curve: int
    multiplicity: int
    least_sheet: int


@dataclass(frozen=True)
class LiftData:
    degree: int
    a_lifts: tuple[tuple[CurveLift, ...], ...]  # indexed by base a-curve
    b_lifts: tuple[tuple[CurveLift, ...], ...]

    @staticmethod
    def _summary(lifts):
        per = [tuple(l.multiplicity for l in ls) for ls in lifts]
        Ls = [lcm(*m) for m in per]
        const = [len(set(m)) == 1 for m in per]
        return per, Ls, const

    @property
    def a_multiplicities(self):
        return self._summary(self.a_lifts)[0]

    @property
    def b_multiplicities(self):
        return self._summary(self.b_lifts)[0]

    @property
    def a_lcm_multiplicities(self) -> list[int]:
        return self._summary(self.a_lifts)[1]

    @property
    def b_lcm_multiplicities(self) -> list[int]:
        return self._summary(self.b_lifts)[1]

    @property
    def uniform(self) -> bool:
        """All a-lifts share one multiplicity L and all b-lifts one multiplicity L'."""
        a = {m for ms in self.a_multiplicities for m in ms}
        b = {m for ms in self.b_multiplicities for m in ms}
        return len(a) == 1 and len(b) == 1

    @property
    def exponents(self) -> tuple[int, int] | None:
        if not self.uniform:
            return None
        return self.a_multiplicities[0][0], self.b_multiplicities[0][0]

    @property
    def max_multiplicity(self) -> int:
        return max(m for ms in self.a_multiplicities + self.b_multiplicities for m in ms)

    def image_exponents(self, kind: str) -> list[int] | None:
        """Exponent of each base curve in the image of the full lifted multitwist.

        Defined when every lift of a given base curve has the same multiplicity.
        """
        per, _, const = self._summary(self.a_lifts if kind == "a" else self.b_lifts)
        if not all(const):
            return None
        return [m[0] for m in per]

    def homomorphism(self) -> dict:
        out = {"uniform": self.uniform, "warnings": []}
        for kind, letter in (("a", "A"), ("b", "B")):
            ex = self.image_exponents(kind)
            if ex is None:
                Ls = self.a_lcm_multiplicities if kind == "a" else self.b_lcm_multiplicities
                out[kind] = {"image": None, "lcm_per_curve": Ls}
                out["warnings"].append(f"lifts of some {kind}-curve have unequal multiplicities; "
                                       f"only products of lift twists with exponents L/n descend")
                continue
            if len(set(ex)) == 1:
                img = letter if ex[0] == 1 else f"{letter}^{ex[0]}"
            else:
                img = " ".join(f"T_{kind}{j + 1}" + (f"^{e}" if e != 1 else "") for j, e in enumerate(ex))
                out["warnings"].append(f"non-uniform {kind}-exponents {ex}")
            out[kind] = {"image": img, "exponents": ex}
        return out

    def to_json(self) -> dict:
        def block(lifts):
            return [[{"cover_curve": l.cover_curve, "multiplicity": l.multiplicity,
                      "least_sheet": l.least_sheet} for l in ls] for ls in lifts]
        return {"degree": self.degree, "a": block(self.a_lifts), "b": block(self.b_lifts),
                "lcm_multiplicities_a": self.a_lcm_multiplicities, "lcm_multiplicities_b": self.b_lcm_multiplicities, "homomorphism": self.homomorphism()}


def _lifts(cover_curves, base_curves, proj: Callable[[int], int], sheet: Callable[[int], int]):
    where = {}
    for j, cyc in enumerate(base_curves):
        for s, _ in cyc:
            where[s] = j
    out: list[list[CurveLift]] = [[] for _ in base_curves]
    for idx, cyc in enumerate(cover_curves):
        squares = [s for s, _ in cyc]
        images = {where[proj(s)] for s in squares}
        if len(images) != 1:
            raise CoverError(f"cover curve {idx} does not lie over a single base curve")
        j = images.pop()
        base_len = len(base_curves[j])
        if len(squares) % base_len:
            raise CoverError(f"cover curve {idx} length is not a multiple of its base curve")
        out[j].append(CurveLift(idx, len(squares) // base_len, min(sheet(s) for s in squares)))
    for j, ls in enumerate(out):
        ls.sort(key=lambda l: (l.least_sheet, l.cover_curve))
    return tuple(tuple(ls) for ls in out)


def lift_data(base: SquareComplex, cover: SquareComplex, proj: Callable[[int], int] | None = None) -> LiftData:
    m = base.squares
    if proj is None:
        proj = lambda s: s % m  # noqa: E731
    if cover.squares % m:
        raise CoverError("cover square count is not a multiple of the base")
    cb, cc = base.curves, cover.curves
    sheet = lambda s: s // m  # noqa: E731
    data = LiftData(cover.squares // m, _lifts(cc.a_curves, cb.a_curves, proj, sheet),
                    _lifts(cc.b_curves, cb.b_curves, proj, sheet))
    for lifts in data.a_lifts + data.b_lifts:
        if sum(l.multiplicity for l in lifts) != data.degree:
            raise CoverError("lift multiplicities do not sum to the degree")
    return data


def lift_multitwists(c: SquareComplex, spec: CoverSpec, cover: SquareComplex | None = None) -> LiftData:
    cover = cover or build_cover(c, spec)
    return lift_data(c, cover)


# -- verification --------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"check": self.name, "ok": self.ok, **self.detail}


@dataclass
class CoverReport:
    checks: list[CheckResult]
    lifts: LiftData
    structure_note: str = ("pulled-back structure: base rectangle dimensions on lifted squares; "
                           "intrinsic structure: PF eigendata of the cover's own incidence matrix")

    @property
    def ok(self) -> bool:
        return all(ch.ok for ch in self.checks)

    def to_json(self) -> dict:
        return {"ok": self.ok, "lifts": self.lifts.to_json(), "structures": self.structure_note,
                "checks": [ch.to_json() for ch in self.checks]}


def _mu_ratio(mu_cover, mu_base) -> Fraction | None:
    from .algebra import NumberField

    def elem(mu):
        return NumberField(mu).gen if not mu.is_rational() else mu.as_rational()

    K, a, b = common_field(elem(mu_cover), elem(mu_base))
    r = a / b
    return r.rational() if r.is_rational() else None


def compare_words(up: TwistWord, mu_up, down: TwistWord, mu_down) -> CheckResult:
    cu, cd = classify(up, mu_up), classify(down, mu_down)
    detail = {"upstairs": str(up), "downstairs": str(down),
              "classification": [cu.value, cd.value]}
    if cu != cd:
        return CheckResult("lambda", False, detail)
    if cu is not Classification.PSEUDO_ANOSOV:
        return CheckResult("lambda", True, detail)
    lu, ld = expansion_factor(up, mu_up), expansion_factor(down, mu_down)
    detail.update({"lambda_up": str(lu.value), "lambda_down": str(ld.value),
                   "minpoly": str(lu.minpoly)})
    return CheckResult("lambda", lu.value == ld.value, detail)


DEFAULT_WORDS = ("A B", "A B^-1", "A^2 B^-1", "A B^2 A^-1 B^-1")


def verify_cover(c: SquareComplex, spec: CoverSpec,
                 words: Sequence[tuple[TwistWord, TwistWord | None]] | None = None) -> CoverReport:
    cover = build_cover(c, spec)
    lifts = lift_data(c, cover)
    if not lifts.uniform:
        raise CoverError("verification needs uniform lifting multiplicities; "
                         f"got a: {lifts.a_multiplicities}, b: {lifts.b_multiplicities}")
    L, Lb = lifts.exponents
    base, up = build_flat(c), build_flat(cover)
    checks = []

    ratio = _mu_ratio(up.mu, base.mu)
    checks.append(CheckResult("mu", ratio == L * Lb, {
        "mu_cover": str(up.mu), "mu_base": str(base.mu),
        "ratio": str(ratio) if ratio is not None else None, "expected_ratio": L * Lb,
        "cover_NtN": [list(r) for r in cogram(cover.incidence)],
        "cover_NtN_charpoly": str(charpoly(cogram(cover.incidence)))}))

    if words is None:
        words = [(TwistWord.parse(w), None) for w in DEFAULT_WORDS]
    for w_up, w_down in words:
        image = w_up.substitute(L, Lb)
        target = w_down if w_down is not None else image
        ch = compare_words(w_up, up.mu, target, base.mu)
        ch.detail["matches_homomorphism_image"] = target == image
        checks.append(ch)

    j_base = j_of_flat(base)
    j_pull = j_of_flat(pulled_back(base, cover, lambda s: s % c.squares))
    checks.append(CheckResult("j_pullback", j_pull == j_cover_scale(j_base, spec.degree), {
        "structure": "pulled-back", "j_cover": j_pull.pretty(), "degree_times_base": j_cover_scale(j_base, spec.degree).pretty()}))

    j_up = j_of_flat(up)
    eq = j_equivalence(j_pull, j_up)
    checks.append(CheckResult("j_intrinsic", eq.verdict is not Verdict.DISTINCT, {
        "structure": "intrinsic", "equal_to_pullback": j_up == j_pull,
        "equivalence": eq.to_json()}))
    return CoverReport(checks, lifts)


# -- towers --------------------------------------------------------------------

def _projection_is_covering(top: SquareComplex, bottom: SquareComplex, proj) -> bool:
    glued = {}
    for g in bottom.gluings:
        glued[g.a] = (g.b, g.flip)
        glued[g.b] = (g.a, g.flip)
    for g in top.gluings:
        a, b = (proj(g.a[0]), g.a[1]), (proj(g.b[0]), g.b[1])
        if glued.get(a) != (b, g.flip):
            return False
    return True


def cover_tower_check(c: SquareComplex, cut: Iterable[int], m: int, n: int,
                      words: Sequence[str] = ("A B", "A B^-1", "A^2 B")) -> CoverReport:
    """Check that the mn-fold cyclic cover factors through the m- and n-fold ones."""
    cut = sorted(set(cut))
    sq = c.squares
    covers = {k: build_cover(c, cyclic_cover_from_cut(c, cut, k)) for k in {m, n, m * n}}
    top = covers[m * n]
    top_lifts = lift_data(c, top)
    checks = []
    for k in (m, n):
        mid = covers[k]
        proj = lambda s, k=k: ((s // sq) % k) * sq + s % sq  # noqa: E731
        ok = _projection_is_covering(top, mid, proj)
        detail = {"intermediate_degree": k}
        if ok:
            rel = lift_data(mid, top, proj)
            low = lift_data(c, mid)
            for kind in ("a", "b"):
                top_l = top_lifts.a_lifts if kind == "a" else top_lifts.b_lifts
                rel_l = rel.a_lifts if kind == "a" else rel.b_lifts
                low_l = low.a_lifts if kind == "a" else low.b_lifts
                m_of_mid = {l.cover_curve: l.multiplicity for ls in low_l for l in ls}
                m_of_top = {l.cover_curve: l.multiplicity for ls in top_l for l in ls}
                for mid_curve, ls in enumerate(rel_l):
                    for l in ls:
                        if m_of_top[l.cover_curve] != l.multiplicity * m_of_mid[mid_curve]:
                            ok = False
            detail["relative_exponents"] = rel.exponents
            detail["relative_lifts"] = rel.to_json()
        checks.append(CheckResult("factorization", ok, detail))
        if ok and rel.uniform:
            Lr, Lbr = rel.exponents
            mu_top, mu_mid = build_flat(top).mu, build_flat(mid).mu
            for w in words:
                tw = TwistWord.parse(w)
                ch = compare_words(tw, mu_top, tw.substitute(Lr, Lbr), mu_mid)
                ch.detail["intermediate_degree"] = k
                checks.append(ch)
    if m > 1 and n > 1:
        # the same base word seen from both intermediate covers
        mu_m, mu_n = build_flat(covers[m]).mu, build_flat(covers[n]).mu
        lm, ln = lift_data(c, covers[m]), lift_data(c, covers[n])
        if lm.uniform and ln.uniform:
            for w in words:
                tw = TwistWord.parse(w)
                (am, bm), (an, bn) = lm.exponents, ln.exponents
                # an element of the n-cover group and its partner in the m-cover group
                w_n = tw.substitute(am, bm)
                w_m = tw.substitute(an, bn)
                ch = compare_words(w_n, mu_n, w_m, mu_m)
                ch.name = "lambda_cross"
                checks.append(ch)
    return CoverReport(checks, top_lifts)

import json

import pytest
from hypothesis import given, settings, strategies as st

from multitwist.catalog import catalog
from multitwist.covers import (
    CoverError,
    CoverSpec,
    branched_vertices,
    build_cover,
    cover_tower_check,
    cyclic_cover_from_cut,
    is_connected_cover,
    lift_data,
    lift_multitwists,
    verify_cover,
)
from multitwist.flat import build_flat, pulled_back
from multitwist.jinvariant import Verdict, j_cover_scale, j_equivalence, j_of_flat

BETTER_CUT = (3, 5)  # the two vertical gluings between the staircase columns of A4


@st.composite
def specs(draw, max_degree=4, gluings=6):
    n = draw(st.integers(1, max_degree))
    keys = draw(st.sets(st.integers(0, gluings - 1), max_size=gluings))
    return CoverSpec(n, {g: tuple(draw(st.permutations(range(n)))) for g in sorted(keys)})


@given(specs())
def test_spec_json_roundtrip(spec):
    assert CoverSpec.loads(spec.dumps()) == spec
    assert CoverSpec.from_json(json.loads(json.dumps(spec.to_json()))) == spec


def test_spec_file_is_one_based():
    assert CoverSpec(3, {5: (1, 2, 0)}).to_json() == {"degree": 3, "monodromy": {"5": [2, 3, 1]}}
    with pytest.raises(CoverError):
        CoverSpec.from_json({"degree": 2, "monodromy": {"0": [0, 1]}})
    with pytest.raises(CoverError):
        CoverSpec(0)


def test_degree_one_is_base():
    c = catalog("A4")
    assert build_cover(c, CoverSpec(1)) == c


def test_gluing_out_of_range():
    with pytest.raises(CoverError, match="out of range"):
        build_cover(catalog("A4"), CoverSpec(2, {9: (1, 0)}))


def test_coboundary_cut_is_disconnected():
    c = catalog("A4")
    spec = CoverSpec(2, {1: (1, 0), 2: (1, 0)})
    assert not is_connected_cover(c, spec)
    with pytest.raises(CoverError, match="disconnected"):
        build_cover(c, spec)
    with pytest.raises(CoverError):
        cyclic_cover_from_cut(c, [1, 2], 2)
    with pytest.raises(CoverError):
        cyclic_cover_from_cut(c, [], 2)


def test_branching_policy():
    c = catalog("A5")
    spec = cyclic_cover_from_cut(c, [4], 2)
    assert branched_vertices(c, spec)
    with pytest.raises(CoverError, match="branches"):
        build_cover(c, spec)
    cover = build_cover(c, spec, allow_branching=True)
    assert cover.is_valid() and cover.squares == 2 * c.squares


def test_unbranched_cover_euler_characteristic():
    c = catalog("A4")
    for n in (2, 3, 4):
        cover = build_cover(c, cyclic_cover_from_cut(c, BETTER_CUT, n))
        assert cover.euler_characteristic == n * c.euler_characteristic
        assert cover.name == f"A4~{n}"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_better_cut_family(n):
    c = catalog("A4")
    spec = cyclic_cover_from_cut(c, BETTER_CUT, n)
    lifts = lift_multitwists(c, spec)
    assert lifts.exponents == (1, n)
    assert lifts.homomorphism()["b"]["image"] == f"B^{n}"
    report = verify_cover(c, spec)
    assert report.ok, report.to_json()


def test_first_cut_is_non_uniform():
    c = catalog("A4")
    spec = cyclic_cover_from_cut(c, [5], 2)
    lifts = lift_multitwists(c, spec)
    assert not lifts.uniform
    hom = lifts.homomorphism()
    assert hom["b"]["image"] == "T_b1 T_b2^2"
    assert hom["warnings"] == ["non-uniform b-exponents [1, 2]"]
    with pytest.raises(CoverError, match="uniform"):
        verify_cover(c, spec)
    cover = build_cover(c, spec)
    assert len(cover.incidence) == 4 and len(cover.incidence[0]) == 3
    assert cover.delta == {6: 2}


def test_lift_multiplicities_sum_to_degree():
    c = catalog("D4")
    spec = CoverSpec(3, {0: (1, 2, 0), 3: (1, 0, 2)})
    cover = build_cover(c, spec, allow_branching=True)
    data = lift_data(c, cover)
    for per_curve in (data.a_multiplicities, data.b_multiplicities):
        assert all(sum(ms) == 3 for ms in per_curve)


def test_intrinsic_structure_is_rescaled_pullback():
    c = catalog("A4")
    cover = build_cover(c, cyclic_cover_from_cut(c, BETTER_CUT, 2))
    base = build_flat(c)
    pull = j_of_flat(pulled_back(base, cover, lambda s: s % c.squares))
    intrinsic = j_of_flat(build_flat(cover))
    assert pull == j_cover_scale(j_of_flat(base), 2)
    assert j_equivalence(pull, intrinsic).verdict is Verdict.EQUIVALENT


def test_tower():
    c = catalog("A4")
    for m, n in ((2, 2), (2, 3)):
        assert cover_tower_check(c, BETTER_CUT, m, n).ok


CATALOG_FOR_COVERS = ("A4", "A5", "D4", "D5", "E6", "P6")


@settings(max_examples=20)
@given(st.sampled_from(CATALOG_FOR_COVERS), st.data())
def test_covering_lemma_random(name, data):
    c = catalog(name)
    spec = data.draw(specs(max_degree=3, gluings=len(c.gluings)))
    if not is_connected_cover(c, spec):
        return
    cover = build_cover(c, spec, allow_branching=True)
    base = build_flat(c)
    pull = pulled_back(base, cover, lambda s: s % c.squares)
    assert j_of_flat(pull) == j_cover_scale(j_of_flat(base), spec.degree)

import json

import pytest
from hypothesis import given, settings

from multitwist.catalog import catalog
from multitwist.complex import (
    Gluing,
    InvalidComplex,
    SquareComplex,
    format_delta,
    from_curves,
    gauss_bonnet_defect,
    genus_and_euler,
    incidence_graph,
    is_free_by_graph,
    origami,
    singularity_data,
    square_torus,
    validate,
)

from strategies import random_complexes


def test_square_torus():
    t = square_torus()
    assert t.incidence == ((1,),)
    assert singularity_data(t) == {}
    assert genus_and_euler(t) == (1, 0)
    assert len(t.vertices) == 1 and len(t.vertices[0]) == 4


def test_l_shaped_staircase():
    # 3 squares: a1 = {0,1}, a2 = {2}; b1 = {0}, b2 = {1,2}
    c = origami([1, 0, 2], [0, 2, 1])
    assert c.incidence == ((1, 1), (0, 1))
    assert c.delta == {6: 1}
    assert c.genus == 2


def test_missing_side_is_reported():
    c = SquareComplex(1, (Gluing((0, "E"), (0, "W"), False),))
    codes = {v.code for v in validate(c)}
    assert codes == {"open side"}
    with pytest.raises(InvalidComplex):
        singularity_data(c)


@pytest.mark.parametrize("gl, code", [
    ((Gluing((0, "E"), (0, "N"), False),), "axis mismatch"),
    ((Gluing((0, "E"), (0, "W"), True),), "flip mismatch"),
    ((Gluing((0, "E"), (0, "W"), False), Gluing((0, "E"), (0, "W"), False)), "side glued twice"),
    ((Gluing((0, "E"), (3, "W"), False),), "bad side"),
])
def test_violations(gl, code):
    assert code in {v.code for v in validate(SquareComplex(1, gl))}


def test_half_turn_pillowcase():
    # one square, E glued to itself after a half-turn is not allowed; use two squares
    c = from_curves([[(0, 1), (1, -1)]], [[(0, 1)], [(1, 1)]])
    assert c.is_valid()
    assert not c.is_translation()
    assert gauss_bonnet_defect(c) == 0


def test_file_roundtrip():
    c = catalog("A4")
    back = SquareComplex.loads(c.dumps())
    assert back == c
    assert c.dumps().startswith("mtl-complex v1\n")
    with pytest.raises(ValueError):
        SquareComplex.loads(json.dumps(c.to_json()))


def test_marked_points_roundtrip():
    c = catalog("D5")
    assert c.marked
    assert SquareComplex.loads(c.dumps()).marked == c.marked


def test_format_delta():
    assert format_delta({}) == "0"
    assert format_delta({4: 2, 6: 1}) == "2e_4 + e_6"


def test_incidence_graph_components():
    _, N, g = incidence_graph(catalog("D4"))
    assert [list(r) for r in N] == [[1], [1], [1]] or [list(r) for r in N] == [[1, 1, 1]]
    assert g.is_connected()


@pytest.mark.parametrize("name, free", [("A4", False), ("E8", False), ("E6", False),
                                         ("D7", False), ("E9", True), ("P4", True), ("A3", False)])
def test_freeness(name, free):
    assert is_free_by_graph(catalog(name).graph) is free


@settings(max_examples=60)
@given(random_complexes(max_squares=20))
def test_corner_counts(c):
    assert sum(len(o) for o in c.vertices) == 4 * c.squares
    assert sum(sum(r) for r in c.incidence) == c.squares
    assert all(len(o) % 2 == 0 for o in c.vertices)


@settings(max_examples=60)
@given(random_complexes(max_squares=20))
def test_gauss_bonnet_random(c):
    assert gauss_bonnet_defect(c) == 0
    assert sum((n - 2) * m for n, m in c.delta.items()) == 4 * (c.genus - 1)


@settings(max_examples=30)
@given(random_complexes(max_squares=12, translation=True))
def test_translation_surfaces_have_even_prongs(c):
    assert all(n % 2 == 0 for n in c.delta)


@settings(max_examples=30)
@given(random_complexes(max_squares=15))
def test_json_roundtrip_random(c):
    assert SquareComplex.from_json(json.loads(json.dumps(c.to_json()))) == c

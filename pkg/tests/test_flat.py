from fractions import Fraction

import pytest
from hypothesis import given, settings

from multitwist.catalog import catalog, catalog_names
from multitwist.complex import from_curves, square_torus
from multitwist.flat import (
    DisconnectedConfiguration,
    area,
    build_flat,
    cogram,
    cylinder_dimensions,
)

from strategies import random_complexes


def test_a4_rectangles():
    f = build_flat(catalog("A4"))
    gamma = f.sqrt_mu
    assert gamma * gamma == gamma + 1
    dims = sorted((tuple(map(float, f.dimensions(s))) for s in range(3)))
    g = float(gamma)
    assert dims == pytest.approx(sorted([(g, 1), (g, g), (1, g)]))
    assert [f.dimensions(s) for s in range(3)] == [(gamma, f.field.one), (gamma, gamma), (f.field.one, gamma)]


def test_a3_rectangles():
    f = build_flat(catalog("A3"))
    half_root = f.sqrt_mu.inverse()  # 2^{-1/2}
    for s in range(2):
        assert f.dimensions(s) == (half_root, f.field.one)


def test_torus():
    f = build_flat(square_torus())
    assert f.dimensions(0) == (f.field.one, f.field.one)
    assert area(f) == 1
    for cyl in cylinder_dimensions(f):
        assert (cyl.height, cyl.circumference) == (1, 1)


def test_a4_circumference_and_area():
    f = build_flat(catalog("A4"))
    gamma = f.sqrt_mu
    a1 = next(c for c in cylinder_dimensions(f) if c.direction == "a" and c.index == 0)
    assert a1.height == 1 and a1.circumference == gamma
    assert area(f) == gamma * gamma + 2 * gamma
    # frozen: 5/2 + 3 sqrt5 / 2
    assert float(area(f)) == pytest.approx(5.854101966249685, abs=1e-12)


def test_a3_area():
    f = build_flat(catalog("A3"))
    assert area(f) * area(f) == 2


def test_a7_middle_cylinder():
    f = build_flat(catalog("A7"))
    mid = [c for c in cylinder_dimensions(f) if c.direction == "a"][1]
    assert mid.height * mid.height == 2
    two_plus_root2 = f.mu_element
    assert mid.circumference * mid.circumference == 2 * two_plus_root2
    assert float(mid.circumference) == pytest.approx(2.6131259297527530557, abs=1e-12)
    assert [float(w) for w in f.widths] == pytest.approx(
        [0.541196100146197, 1.30656296487638, 1.30656296487638, 0.541196100146197], abs=1e-12)


def test_disconnected_names_components():
    # two tori side by side
    c = from_curves([[(0, 1)], [(1, 1)]], [[(0, 1)], [(1, 1)]])
    with pytest.raises(DisconnectedConfiguration, match=r"\{a1 b1\} \| \{a2 b2\}"):
        build_flat(c)


@pytest.mark.parametrize("name", catalog_names(8))
def test_widths_are_cogram_eigenvector(name):
    f = build_flat(catalog(name))
    M = cogram(f.complex.incidence)
    mu = f.mu_element
    for k, row in enumerate(M):
        assert sum((f.widths[i] * row[i] for i in range(len(row))), f.field.zero) == mu * f.widths[k]
    assert f.heights[0] == 1
    assert all(x.sign() > 0 for x in f.heights + f.widths)


@settings(max_examples=25)
@given(random_complexes(max_squares=8))
def test_circumference_identity_random(c):
    f = build_flat(c)
    cylinder_dimensions(f)  # raises on mismatch
    total = sum((f.widths[k] * f.heights[j] * m for j, row in enumerate(c.incidence)
                 for k, m in enumerate(row)), f.field.zero)
    assert total == area(f)

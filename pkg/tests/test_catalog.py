import pytest

from multitwist.catalog import (
    UnknownConfiguration,
    catalog,
    catalog_names,
    matrix_A,
    parse_name,
)
from multitwist.complex import gauss_bonnet_defect


@pytest.mark.parametrize("name", catalog_names())
def test_entries_are_valid_and_connected(name):
    c = catalog(name)
    assert c.is_valid() and c.is_connected()
    assert gauss_bonnet_defect(c) == 0


@pytest.mark.parametrize("name", [f"A{n}" for n in range(2, 12)])
def test_a_family_bidiagonal(name):
    N = [list(r) for r in catalog(name).incidence]
    if len(N) >= len(N[0]):
        pattern = N
    else:
        pattern = [list(r) for r in zip(*N)]
    for j, row in enumerate(pattern):
        for k, m in enumerate(row):
            assert m == (1 if k in (j - 1, j) else 0)


def test_small_examples():
    assert catalog("A4").squares == 3
    assert catalog("P2").incidence == ((2,),)
    N = catalog("D4").incidence
    assert sorted(map(tuple, [N[0]] if len(N) == 1 else zip(*N))) == [(1, 1, 1)]


def test_matrix_A_shape():
    assert matrix_A(4) == [[1, 0], [1, 1]]
    assert matrix_A(5) == [[1, 1, 0], [0, 1, 1]]


@pytest.mark.parametrize("bad", ["Z3", "A1", "D3", "E5", "P3", "R10", "FillingPair(1)", ""])
def test_unknown(bad):
    with pytest.raises(UnknownConfiguration):
        catalog(bad)


def test_name_aliases():
    assert parse_name("A_4") == ("A", 4)
    assert catalog("FillingPair3") == catalog("FillingPair(3)")

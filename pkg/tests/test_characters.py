from fractions import Fraction

import pytest

from qeuler.characters import (DirichletCharacter, character_convolution,
                               character_from_table, character_value,
                               parse_character, trivial_character)
from qeuler.scalar import Number

CHI3 = character_from_table(3, [0, 1, -1])


def test_chi3_periodic_values():
    assert CHI3.conductor == 3
    vals = [complex(CHI3(m)).real for m in range(9)]
    assert vals == [0, 1, -1, 0, 1, -1, 0, 1, -1]
    assert CHI3.is_exact
    assert not CHI3.is_trivial


def test_trivial_character():
    triv = trivial_character()
    assert triv.conductor == 1
    assert triv.is_trivial
    assert all(complex(triv(m)) == 1 for m in range(5))


def test_from_table_validation():
    with pytest.raises(ValueError):
        character_from_table(0, [])
    with pytest.raises(ValueError):
        character_from_table(3, [0, 1])  # wrong length
    with pytest.raises(ValueError):
        character_from_table(3, [1, 1, 1])  # chi(0) must vanish for f > 1


def test_character_value_rejects_negative():
    with pytest.raises(ValueError):
        character_value(CHI3, -1)
    assert character_value(CHI3, 4).fraction == 1


def test_convolution_trivial_counts_lattice_points():
    # with chi = 1 and no weights, c[m] is the number of compositions
    triv = trivial_character()
    c = character_convolution(triv, [None, None], 6)
    assert [v.fraction for v in c] == [1, 2, 3, 4, 5, 6, 7]
    c3 = character_convolution(triv, [None] * 3, 5)
    assert [v.fraction for v in c3] == [1, 3, 6, 10, 15, 21]


def test_convolution_chi3_pair():
    c = character_convolution(CHI3, [None, None], 5)
    assert [v.fraction for v in c] == [0, 0, 1, -2, 1, 2]


def test_convolution_with_weights():
    # weight (-1)^m on one coordinate only
    triv = trivial_character()
    c = character_convolution(triv, [lambda m: (-1) ** m, None], 4)
    # c[m] = sum_{i+j=m} (-1)^i = 1 if m even else 0
    assert [v.fraction for v in c] == [1, 0, 1, 0, 1]


def test_parse_character():
    chi = parse_character("f=3;values=0,1,-1")
    assert chi.conductor == 3
    assert chi(2).fraction == -1
    chi = parse_character("f=1;values=1")
    assert chi.is_trivial
    for bad in ("f=3", "values=0,1", "f=3;values=0,1", "f=x;values=1",
                "f=3;values=0,1,-1;extra=2"):
        with pytest.raises(ValueError):
            parse_character(bad)


def test_from_table_rejects_nonnumber_values():
    with pytest.raises(TypeError):
        character_from_table(3, [0, "1", -1])


def test_from_table_rejects_even_conductor():
    with pytest.raises(ValueError):
        character_from_table(2, [0, 1])


def test_raw_constructor_is_a_plain_container():
    # invariants live in character_from_table; the class just stores
    chi = DirichletCharacter(2, (Number.exact(0), Number.exact(1)))
    assert chi(3).fraction == 1

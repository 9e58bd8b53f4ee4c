import itertools

import pytest

from surfhom.counting import (NONORIENTABLE, ORIENTABLE, count_closed_nonorientable, count_closed_orientable,
                              count_general, count_surface, linear_character_identity,
                              reorder_and_invert_invariance, tuple_sum_identity)
from surfhom.errors import UsageError
from surfhom.oracle import oracle_count_with_boundary
from surfhom.words import commutators_word, parse_word, squares_word

from conftest import ZOO_SPECS, group, table



def s3_class(cycle_type):
    G = group("builtin:sym:3")
    return next(i for i in range(len(G.classes)) if G.classes.cycle_type(i) == cycle_type)


def family_word(kind, genus):
    return commutators_word(genus) if kind == ORIENTABLE else squares_word(genus)


def test_closed_examples():
    T = table("builtin:sym:3")
    assert count_closed_orientable(T, 0).value == 1
    assert count_closed_orientable(T, 1).value == 18
    assert count_closed_orientable(T, 2).value == 486
    assert count_closed_nonorientable(T, 1).value == 4
    assert count_closed_nonorientable(T, 2).value == 18
    assert count_closed_nonorientable(table("builtin:q8"), 1).value == 2
    for spec in ZOO_SPECS:
        assert count_closed_orientable(table(spec), 0).value == 1


def test_terms_sum_to_value():
    result = count_closed_orientable(table("builtin:sym:3"), 2)
    assert result.terms == (216, 216, 54)
    assert sum(int(t) for t in result.terms) == result.value == int(result)


def test_bounded_examples():
    T = table("builtin:sym:3")
    trans, cyc3 = s3_class((2, 1)), s3_class((3,))
    assert count_surface(T, NONORIENTABLE, 1, [cyc3]).value == 2
    assert count_surface(T, NONORIENTABLE, 1, [0]).value == 4
    assert count_surface(T, ORIENTABLE, 0, [0]).value == 1
    for c in range(len(T.classes)):
        inverse = T.classes.inverse_class[c]
        assert count_surface(T, ORIENTABLE, 0, [c, inverse]).value == T.classes[c].size
    G = T.group
    assert count_surface(T, ORIENTABLE, 1, [trans]).value == \
        oracle_count_with_boundary(commutators_word(1), G, [trans])
    assert count_surface(T, NONORIENTABLE, 2, [trans]).value == \
        oracle_count_with_boundary(squares_word(2), G, [trans])


def _boundaries(h, n_max):
    for n in range(n_max + 1):
        yield from itertools.product(range(h), repeat=n)


@pytest.mark.parametrize("spec", ZOO_SPECS)
@pytest.mark.parametrize("kind, genus", [(ORIENTABLE, 0), (ORIENTABLE, 1), (ORIENTABLE, 2),
                                         (NONORIENTABLE, 1), (NONORIENTABLE, 2), (NONORIENTABLE, 3)])
def test_surface_formula_matches_oracle(spec, kind, genus):
    T = table(spec)
    w = family_word(kind, genus)
    for boundary in _boundaries(len(T.classes), 2):
        assert count_surface(T, kind, genus, boundary).value == \
            oracle_count_with_boundary(w, T.group, boundary), boundary


def test_empty_boundary_is_closed_formula(zoo_spec):
    T = table(zoo_spec)
    assert count_surface(T, ORIENTABLE, 2, []) == count_closed_orientable(T, 2)
    assert count_surface(T, NONORIENTABLE, 3, []) == count_closed_nonorientable(T, 3)


def test_solomon_divisibility_of_closed_counts(zoo_spec):
    T = table(zoo_spec)
    for g in (1, 2, 3):
        assert count_closed_orientable(T, g).value % T.order == 0
    for k in (2, 3, 4):
        assert count_closed_nonorientable(T, k).value % T.order == 0


@pytest.mark.parametrize("text, rank", [("x1^3", 1), ("[x1,x2,x3]", 3), ("x1^2 x2^3", 2),
                                        ("x1 x2 x1^-1 x2", 2), ("[x1,x2]^2", 2), ("[x1,x2] x3^2", 3),
                                        ("x1^2", 2), ("1", 1)])
def test_general_engine_matches_oracle(zoo_spec, text, rank):
    T = table(zoo_spec)
    w = parse_word(text, rank)
    for boundary in _boundaries(len(T.classes), 1):
        assert count_general(w, T, boundary).value == oracle_count_with_boundary(w, T.group, boundary)


def test_general_engine_examples():
    T = table("builtin:sym:3")
    G = T.group
    cyc3 = s3_class((3,))
    assert count_general(parse_word("x1^3", 1), T, [cyc3]).value == \
        oracle_count_with_boundary(parse_word("x1^3", 1), G, [cyc3])
    assert count_general(parse_word("[x1,x2,x3]", 3), T, [0]).value == \
        oracle_count_with_boundary(parse_word("[x1,x2,x3]", 3), G, [0])
    empty = parse_word("1", 0)
    for c, c2 in itertools.product(range(3), repeat=2):
        expected = T.classes[c].size if c2 == T.classes.inverse_class[c] else 0
        assert count_general(empty, T, [c, c2]).value == expected


def test_tuple_sum_identity():
    T = table("builtin:sym:3")
    assert tuple_sum_identity(T, ORIENTABLE, 1, 2) == (36, 36)
    assert tuple_sum_identity(T, NONORIENTABLE, 1, 2) == (36, 36)


def test_tuple_sum_totals_free_rank(zoo_spec):
    T = table(zoo_spec)
    h = len(T.classes)
    for kind, genus, rank in ((ORIENTABLE, 1, 2), (NONORIENTABLE, 2, 2)):
        for n in (1, 2):
            total = sum(count_surface(T, kind, genus, b).value for b in itertools.product(range(h), repeat=n))
            assert total == T.order ** (rank + n - 1)


def test_linear_character_identity():
    assert linear_character_identity(table("builtin:sym:3"), 1) == (6, 6, 6)
    assert linear_character_identity(table("builtin:q8"), 2) == (64, 64, 64)


def test_reorder_and_invert():
    T = table("builtin:sym:3")
    trans, cyc3 = s3_class((2, 1)), s3_class((3,))
    assert reorder_and_invert_invariance(T, ORIENTABLE, 1, [trans, cyc3], [1, 0])
    assert reorder_and_invert_invariance(T, NONORIENTABLE, 1, [cyc3], [0])
    Z7 = table("builtin:cyc:7")
    for c in range(1, 7):
        assert reorder_and_invert_invariance(Z7, NONORIENTABLE, 1, [c], [0])
        inv = Z7.classes.inverse_class[c]
        assert count_surface(Z7, NONORIENTABLE, 1, [c]).value == \
            oracle_count_with_boundary(squares_word(1), Z7.group, [inv])


def test_argument_errors():
    T = table("builtin:sym:3")
    with pytest.raises(UsageError):
        count_closed_orientable(T, -1)
    with pytest.raises(UsageError):
        count_closed_nonorientable(T, 0)
    with pytest.raises(UsageError):
        count_surface(T, ORIENTABLE, 1, [7])
    with pytest.raises(UsageError):
        count_surface(T, "torus", 1)

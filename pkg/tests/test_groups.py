import pytest

from surfhom.errors import GroupSpecError, InvalidPermutation, OrderCapExceeded
from surfhom.groups import FiniteGroup, Permutation, builtin_group, parse_cycles, parse_group_spec

from conftest import group


def test_permutation_composition_is_right_to_left():
    p = Permutation.from_cycles([[0, 1]], 3)
    q = Permutation.from_cycles([[1, 2]], 3)
    assert (p * q).images == tuple(p.images[q.images[i]] for i in range(3))
    assert (p * q).order() == 3
    assert p * p == Permutation.identity(3)


def test_permutation_rejects_non_bijection():
    with pytest.raises(InvalidPermutation):
        Permutation([0, 0, 1])
    with pytest.raises(InvalidPermutation):
        Permutation.from_cycles([[0, 1], [1, 2]], 3)


def test_cycle_notation_round_trip():
    p = Permutation.from_cycles(parse_cycles("(1 3 2)(4 5)"), 5)
    assert repr(p) == "(1 3 2)(4 5)"
    assert p.cycle_type() == (3, 2)
    assert p.inverse() * p == Permutation.identity(5)


@pytest.mark.parametrize("spec, order, nclasses, exponent", [
    ("builtin:sym:3", 6, 3, 6), ("builtin:sym:4", 24, 5, 12), ("builtin:alt:4", 12, 4, 6),
    ("builtin:dih:4", 8, 5, 4), ("builtin:q8", 8, 5, 4), ("builtin:cyc:6", 6, 6, 6),
    ("builtin:cyc:7", 7, 7, 7), ("builtin:sym:5", 120, 7, 60), ("builtin:dih:1", 2, 2, 2),
    ("builtin:dih:2", 4, 4, 2),
])
def test_builtin_orders_and_classes(spec, order, nclasses, exponent):
    G = parse_group_spec(spec)
    assert G.order == order
    assert len(G.classes) == nclasses
    assert G.exponent == exponent
    assert sum(G.classes.sizes) == order


def test_class_ordering_and_identity(zoo_spec):
    G = group(zoo_spec)
    C = G.classes
    assert G.identity == 0 and list(C[0].members) == [0]
    sizes = C.sizes
    assert sizes[1:] == sorted(sizes[1:])
    for c in C:
        assert c.representative == min(c.members)


def test_classes_are_conjugation_orbits(zoo_spec):
    G = group(zoo_spec)
    C = G.classes
    for c in C:
        rep = c.representative
        orbit = {G.mul(G.mul(g, rep), G.inverse[g]) for g in range(G.order)}
        assert orbit == set(c.members)


def test_multiplication_table_matches_permutations():
    G = group("builtin:alt:4")
    for a in range(G.order):
        for b in range(G.order):
            assert G.elements[int(G.table[a, b])] == G.elements[a] * G.elements[b]


def test_power_and_inverse_classes():
    G = group("builtin:cyc:7")
    C = G.classes
    for i in range(len(C)):
        assert C.inverse_class[C.inverse_class[i]] == i
        assert C.power_class(i, 7) == 0
    assert G.power(1, -1) == G.inverse[1]


def test_perms_spec_matches_builtin():
    G = parse_group_spec("perms:(1 2);(1 2 3)")
    assert G.order == 6 and G.is_symmetric_group()
    H = parse_group_spec("perms:\n(1 2 3 4)\n(1 3)\n")
    assert H.order == 8 and not H.is_symmetric_group()


@pytest.mark.parametrize("bad", ["sym:3", "builtin:nope:3", "builtin:sym:x", "perms:", "perms:(1 2) junk",
                                 "builtin:sym:0"])
def test_bad_specs(bad):
    with pytest.raises(GroupSpecError):
        parse_group_spec(bad)


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        builtin_group("sym", 8)
    with pytest.raises(OrderCapExceeded):
        FiniteGroup([Permutation.from_cycles([[0, 1]], 6), Permutation.from_cycles([list(range(6))], 6)],
                    order_cap=100)

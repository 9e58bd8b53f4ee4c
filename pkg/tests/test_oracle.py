import itertools

import pytest

from surfhom.errors import BudgetExceeded
from surfhom.oracle import (Budget, boundary_products, oracle_class_function, oracle_count_with_boundary,
                            oracle_nth_root_counts, word_histogram)
from surfhom.words import evaluate, parse_word

from conftest import ZOO_SPECS, group


def s3_class(cycle_type):
    G = group("builtin:sym:3")
    return next(i for i in range(len(G.classes)) if G.classes.cycle_type(i) == cycle_type)


def test_identity_word_is_constant(zoo_spec):
    G = group(zoo_spec)
    assert oracle_class_function(parse_word("x1", 1), G).as_ints() == [1] * len(G.classes)


def test_s3_square_and_commutator_counts():
    G = group("builtin:sym:3")
    by_type = {G.classes.cycle_type(i): i for i in range(3)}
    sq = oracle_class_function(parse_word("x1^2", 1), G).as_ints()
    assert [sq[by_type[t]] for t in ((1, 1, 1), (2, 1), (3,))] == [4, 0, 1]
    assert oracle_nth_root_counts(G, 2).as_ints() == sq
    assert oracle_class_function(parse_word("[x1,x2]", 2), G).as_ints()[0] == 18


def test_nth_roots_by_scan(zoo_spec):
    G = group(zoo_spec)
    for n in (1, 3, -2):
        counts = oracle_nth_root_counts(G, n).as_ints()
        for i, c in enumerate(G.classes):
            assert counts[i] == sum(1 for x in range(G.order) if G.power(x, n) == c.representative)


def test_histogram_matches_naive_evaluation():
    G = group("builtin:dih:4")
    w = parse_word("x1 x2^2 x1^-1 x2", 2)
    hist = word_histogram(w, G)
    naive = [0] * G.order
    for a in itertools.product(range(G.order), repeat=2):
        naive[evaluate(w, a, G)] += 1
    assert hist == naive


@pytest.mark.parametrize("workers", [2, 3, 5, 32])
def test_workers_do_not_change_results(workers):
    G = group("builtin:sym:4")
    w = parse_word("[x1,x2] x3^2", 3)
    assert word_histogram(w, G, Budget(workers=workers)) == word_histogram(w, G, Budget(workers=1))


def test_boundary_examples():
    G = group("builtin:sym:3")
    assert oracle_count_with_boundary(parse_word("1", 0), G, [0]) == 1
    assert oracle_count_with_boundary(parse_word("x1^2", 1), G, [s3_class((3,))]) == 2
    trans = s3_class((2, 1))
    w = parse_word("x1^2 x2^2", 2)
    naive = sum(1 for a, b in itertools.product(range(6), repeat=2) for c in G.classes[trans].members
                if G.mul(evaluate(w, (a, b), G), c) == G.identity)
    assert oracle_count_with_boundary(w, G, [trans]) == naive


def test_boundary_products_row_major():
    G = group("builtin:sym:3")
    C = G.classes
    prods = boundary_products(G, [1, 2])
    expected = [G.mul(a, b) for a in C[1].members for b in C[2].members]
    assert list(prods) == expected


def test_budget_exceeded():
    G = group("builtin:sym:4")
    with pytest.raises(BudgetExceeded):
        word_histogram(parse_word("[x1,x2]", 2), G, Budget(max_tuples=100))
    with pytest.raises(BudgetExceeded):
        oracle_count_with_boundary(parse_word("x1^2", 1), G, [1, 1], Budget(max_tuples=100))


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("SURFHOM_BUDGET", "7")
    assert Budget().max_tuples == 7
    with pytest.raises(BudgetExceeded):
        word_histogram(parse_word("x1", 1), group("builtin:cyc:7"), Budget(max_tuples=6))

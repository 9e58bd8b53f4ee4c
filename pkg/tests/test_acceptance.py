"""Acceptance gate: one check per criterion, each reporting a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) or through pytest, where
the lines are repeated in the terminal summary.  Every comparison is exact.
"""
import contextlib
import io
import itertools
import math
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from surfhom.chartable import character_table, symmetric_character_table  # noqa: E402
from surfhom.classfun import closed_form_coefficients, coefficients_from_class_function  # noqa: E402
from surfhom.cli import run  # noqa: E402
from surfhom.counting import (NONORIENTABLE, ORIENTABLE, count_general, count_surface,  # noqa: E402
                              linear_character_identity, tuple_sum_identity)
from surfhom.cyclotomic import Cyclotomic  # noqa: E402
from surfhom.groups import parse_group_spec, symmetric_group  # noqa: E402
from surfhom.oracle import oracle_class_function, oracle_count_with_boundary, word_histogram  # noqa: E402
from surfhom.partitions import hook_product, partition_numbers, partitions_of, symmetric_group_character  # noqa: E402
from surfhom.symfunc import (COMMUTATORS, SQUARES, genfun_coefficients, specialized_identity_check,  # noqa: E402
                             word_power_sum_average, word_schur_side)
from surfhom.verify import SOLOMON_WORDS  # noqa: E402
from surfhom.words import Generic, commutators_word, evaluate, parse_word, recognize_shape, squares_word  # noqa: E402

ZOO = ("builtin:sym:3", "builtin:sym:4", "builtin:alt:4", "builtin:dih:4",
       "builtin:q8", "builtin:cyc:6", "builtin:cyc:7")

REPORT: list[str] = []


@contextlib.contextmanager
def criterion(number: int, title: str):
    try:
        yield
    except BaseException as exc:
        line = f"FAIL criterion {number}: {title} ({type(exc).__name__}: {exc})"
        REPORT.append(line)
        print(line)
        raise
    line = f"PASS criterion {number}: {title}"
    REPORT.append(line)
    print(line)


def fresh(spec):
    return parse_group_spec(spec)


def naive_count(word, G, boundary=()):
    """Plain-Python enumeration, independent of the vectorized oracle."""
    members = [G.classes[c].members for c in boundary]
    total = 0
    for assignment in itertools.product(range(G.order), repeat=word.rank):
        x = evaluate(word, assignment, G)
        for cs in itertools.product(*members):
            y = x
            for c in cs:
                y = G.mul(y, c)
            total += y == G.identity
    return total


def test_criterion_01_character_tables():
    with criterion(1, "character tables orthogonal, sum of squared degrees is |G|, degrees divide |G|"):
        start = time.perf_counter()
        for spec in ZOO:
            T = character_table(fresh(spec))
            T.validate()
            G, h = T.group, len(T.classes)
            sizes = T.classes.sizes
            zero = Cyclotomic.rational(0, T.e)
            for i, j in itertools.product(range(h), repeat=2):
                row = sum((sizes[c] * T.values[i][c] * T.values[j][c].conjugate() for c in range(h)), zero)
                assert row == (G.order if i == j else 0)
                col = sum((T.values[x][i] * T.values[x][j].conjugate() for x in range(h)), zero)
                assert col == (Fraction(G.order, sizes[i]) if i == j else 0)
            assert sum(d * d for d in T.degrees) == G.order
            assert all(G.order % d == 0 for d in T.degrees)
        assert time.perf_counter() - start < 10


def test_criterion_02_commutator_and_square_root_counts():
    with criterion(2, "character sums give commutator-equation and square-root counts"):
        for spec in ZOO:
            T = character_table(fresh(spec))
            G = T.group
            comm = word_histogram(parse_word("[x1,x2]", 2), G)
            roots = word_histogram(parse_word("x1^2", 1), G)
            for w in range(G.order):
                c = T.classes.class_of[w]
                zero = Cyclotomic.rational(0, T.e)
                via_comm = sum((T.values[x][c] * Fraction(G.order, d) for x, d in enumerate(T.degrees)), zero)
                via_sq = sum((T.values[x][c] * nu for x, nu in enumerate(T.fs_indicators)), zero)
                assert via_comm == comm[w]
                assert via_sq == roots[w]


def test_criterion_03_closed_surfaces():
    with criterion(3, "closed-surface formula equals brute force (S_3, D_4, Q_8)"):
        for spec in ("builtin:sym:3", "builtin:dih:4", "builtin:q8"):
            T = character_table(fresh(spec))
            for g in (1, 2):
                assert count_surface(T, ORIENTABLE, g).value == \
                    oracle_count_with_boundary(commutators_word(g), T.group, [])
            for k in (1, 2, 3):
                assert count_surface(T, NONORIENTABLE, k).value == \
                    oracle_count_with_boundary(squares_word(k), T.group, [])
        S3, Q8 = fresh("builtin:sym:3"), fresh("builtin:q8")
        pinned = [(S3, ORIENTABLE, 1, 18), (S3, ORIENTABLE, 2, 486), (S3, NONORIENTABLE, 1, 4),
                  (Q8, NONORIENTABLE, 1, 2)]
        for G, kind, genus, value in pinned:
            word = commutators_word(genus) if kind == ORIENTABLE else squares_word(genus)
            assert naive_count(word, G) == value
            assert count_surface(character_table(G), kind, genus).value == value


def test_criterion_04_bounded_surfaces():
    with criterion(4, "bounded-surface formulas equal brute force over all class choices (S_3, D_4)"):
        for spec in ("builtin:sym:3", "builtin:dih:4"):
            T = character_table(fresh(spec))
            h = len(T.classes)
            for kind, genus in ((ORIENTABLE, 0), (ORIENTABLE, 1), (NONORIENTABLE, 1), (NONORIENTABLE, 2)):
                word = commutators_word(genus) if kind == ORIENTABLE else squares_word(genus)
                for n in (1, 2):
                    for boundary in itertools.product(range(h), repeat=n):
                        assert count_surface(T, kind, genus, boundary).value == \
                            oracle_count_with_boundary(word, T.group, boundary)
        S3 = fresh("builtin:sym:3")
        cyc3 = next(i for i in range(3) if S3.classes.cycle_type(i) == (3,))
        assert naive_count(squares_word(1), S3, [cyc3]) == 2
        assert count_surface(character_table(S3), NONORIENTABLE, 1, [cyc3]).value == 2


def test_criterion_05_general_words():
    with criterion(5, "coefficient-based counts for x1^3, [x1,x2,x3], x1^2 x2^3 equal brute force on S_3"):
        T = character_table(fresh("builtin:sym:3"))
        for text, rank in (("x1^3", 1), ("[x1,x2,x3]", 3), ("x1^2 x2^3", 2)):
            w = parse_word(text, rank)
            shape = recognize_shape(w)
            assert not isinstance(shape, Generic)
            coeffs = closed_form_coefficients(shape, T)
            assert coeffs == coefficients_from_class_function(oracle_class_function(w, T.group), T)
            boundaries = [()] + [(c,) for c in range(len(T.classes))]
            for boundary in boundaries:
                value = count_general(w, T, boundary, coefficients=coeffs).value
                assert value == oracle_count_with_boundary(w, T.group, boundary)
                assert value == naive_count(w, T.group, boundary)


def test_criterion_06_tuple_sum_and_linear_limit():
    with criterion(6, "tuple-sum identity and linear-character limit on every zoo group"):
        for spec in ZOO:
            T = character_table(fresh(spec))
            for n in (1, 2):
                for kind, genera in ((ORIENTABLE, (1, 2)), (NONORIENTABLE, (1, 2, 3))):
                    for genus in genera:
                        total, expected = tuple_sum_identity(T, kind, genus, n)
                        assert total == expected == T.order ** n
                full, linear, real_linear = linear_character_identity(T, n)
                assert full == linear == real_linear


def test_criterion_07_solomon():
    with criterion(7, "|G| divides the number of solutions of w = 1 for rank >= 2 words"):
        for spec in ZOO:
            G = fresh(spec)
            for text, rank in SOLOMON_WORDS:
                assert rank >= 2
                assert word_histogram(parse_word(text, rank), G)[G.identity] % G.order == 0


def test_criterion_08_symmetric_functions():
    with criterion(8, "power-sum averages equal Schur expansions; 1^q specialization; hook-length formula"):
        for n in range(1, 5):
            for text, rank in (("x1^2", 1), ("x1^2 x2^2", 2), ("[x1,x2]", 2)):
                w = parse_word(text, rank)
                assert word_power_sum_average(w, n) == word_schur_side(w, n)
        for kind, param in ((SQUARES, 1), (SQUARES, 2), (COMMUTATORS, 1)):
            for n in range(1, 6):
                for q in (1, 2, 3):
                    left, right = specialized_identity_check(kind, param, n, q)
                    assert left == right
        for n in range(1, 9):
            degrees = symmetric_character_table(symmetric_group(n)).degrees if n <= 6 else None
            for lam in partitions_of(n):
                value = Fraction(math.factorial(n), hook_product(lam))
                assert value == symmetric_group_character(lam, (1,) * n)
                if degrees is not None:
                    assert value in degrees


def test_criterion_09_generating_function():
    with criterion(9, "exponent-0 coefficients equal partition numbers up to n = 40"):
        coeffs = genfun_coefficients(0, 40)
        assert coeffs == partition_numbers(40)
        assert coeffs[:11] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        # independent check: coin-change expansion of prod 1/(1 - x^i)
        ways = [1] + [0] * 40
        for part in range(1, 41):
            for total in range(part, 41):
                ways[total] += ways[total - part]
        assert coeffs == ways


def _verify_output(workers: int) -> str:
    out, err = io.StringIO(), io.StringIO()
    status = run(["verify", "--suite", "all", "--machine", "--workers", str(workers)], stdout=out, stderr=err)
    assert status == 0, err.getvalue()
    return out.getvalue()


def test_criterion_10_determinism():
    with criterion(10, "machine output of the full verify suite is byte-identical across runs and workers"):
        first = _verify_output(1)
        assert first == _verify_output(1)
        assert first == _verify_output(4)
        proc = subprocess.run([sys.executable, "-m", "surfhom.cli", "verify", "--suite", "all", "--machine",
                               "--workers", "3"], capture_output=True, text=True, check=True)
        assert proc.stdout == first


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:
                failures += 1
    sys.exit(1 if failures else 0)

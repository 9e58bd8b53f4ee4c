"""Homomorphism counts for surface groups and general one-relator words.

All counts are character sums in Q(zeta_e) that must collapse to nonnegative
integers; :class:`HomCount` keeps the per-character summands so a failed
comparison against the oracle can be traced to a specific character.

Boundary conditions are given as class indices into ``table.classes``.  The
relator is ``w(a) c_1 ... c_n = 1`` with ``c_i`` ranging over class ``C_i``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chartable import CharacterTable
from .classfun import closed_form_coefficients, coefficients_from_class_function
from .cyclotomic import Cyclotomic
from .errors import NonIntegerResult, UsageError
from .words import Generic, Word, recognize_shape

ORIENTABLE = "orientable"
NONORIENTABLE = "nonorientable"


@dataclass(frozen=True)
class HomCount:
    value: int
    terms: tuple[Cyclotomic, ...]

    def __int__(self) -> int:
        return self.value


def _finish(terms: list[Cyclotomic], e: int) -> HomCount:
    total = sum(terms, Cyclotomic.rational(0, e))
    if not total.is_rational_integer() or int(total) < 0:
        raise NonIntegerResult(f"character sum evaluates to {total}")
    return HomCount(int(total), tuple(terms))


def _boundary_product(table: CharacterTable, chi: int, boundary: Sequence[int]) -> Cyclotomic:
    value = Cyclotomic.rational(1, table.e)
    for c in boundary:
        value = value * table.values[chi][c]
    return value


def _check_boundary(table: CharacterTable, boundary: Sequence[int]) -> None:
    h = len(table.classes)
    for c in boundary:
        if not 0 <= c < h:
            raise UsageError(f"class index {c} out of range 0..{h - 1}")


def count_closed_orientable(table: CharacterTable, g: int) -> HomCount:
    """``|Hom(pi_1(S_g), G)| = |G|^(2g-1) * sum_chi chi(1)^(2-2g)``."""
    if g < 0:
        raise UsageError("genus must be nonnegative")
    N = table.order
    terms = [Cyclotomic.rational(Fraction(N) ** (2 * g - 1) * Fraction(d) ** (2 - 2 * g), table.e)
             for d in table.degrees]
    return _finish(terms, table.e)


def count_closed_nonorientable(table: CharacterTable, k: int) -> HomCount:
    """``|Hom(pi_1(N_k), G)| = |G|^(k-1) * sum_chi nu(chi)^k chi(1)^(2-k)``."""
    if k < 1:
        raise UsageError("nonorientable genus must be at least 1")
    N = table.order
    terms = [Cyclotomic.rational(Fraction(N) ** (k - 1) * nu ** k * Fraction(d) ** (2 - k), table.e)
             for d, nu in zip(table.degrees, table.fs_indicators)]
    return _finish(terms, table.e)


def count_bounded_orientable(table: CharacterTable, g: int, boundary: Sequence[int]) -> HomCount:
    if not boundary:
        return count_closed_orientable(table, g)
    if g < 0:
        raise UsageError("genus must be nonnegative")
    _check_boundary(table, boundary)
    N, n = table.order, len(boundary)
    prefactor = Fraction(N) ** (2 * g - 1) * math.prod(table.classes[c].size for c in boundary)
    terms = [_boundary_product(table, chi, boundary) * (prefactor / Fraction(d) ** (n + 2 * g - 2))
             for chi, d in enumerate(table.degrees)]
    return _finish(terms, table.e)


def count_bounded_nonorientable(table: CharacterTable, k: int, boundary: Sequence[int]) -> HomCount:
    if not boundary:
        return count_closed_nonorientable(table, k)
    if k < 1:
        raise UsageError("nonorientable genus must be at least 1")
    _check_boundary(table, boundary)
    N, n = table.order, len(boundary)
    prefactor = Fraction(N) ** (k - 1) * math.prod(table.classes[c].size for c in boundary)
    terms = [_boundary_product(table, chi, boundary) * (prefactor * nu ** k / Fraction(d) ** (n + k - 2))
             for chi, (d, nu) in enumerate(zip(table.degrees, table.fs_indicators))]
    return _finish(terms, table.e)


def count_surface(table: CharacterTable, kind: str, genus: int, boundary: Sequence[int] = ()) -> HomCount:
    if kind == ORIENTABLE:
        return count_bounded_orientable(table, genus, boundary)
    if kind == NONORIENTABLE:
        return count_bounded_nonorientable(table, genus, boundary)
    raise UsageError(f"unknown surface kind {kind!r}")


def word_coefficients(w: Word, table: CharacterTable, budget=None) -> list[Cyclotomic]:
    """Closed-form coefficients when the shape allows, oracle-assisted otherwise."""
    shape = recognize_shape(w)
    if not isinstance(shape, Generic):
        return closed_form_coefficients(shape, table)
    from .oracle import oracle_class_function

    return coefficients_from_class_function(oracle_class_function(w, table.group, budget), table)


def count_general(w: Word, table: CharacterTable, boundary: Sequence[int] = (), budget=None,
                  coefficients: Sequence[Cyclotomic] | None = None) -> HomCount:
    """``#{(a, c) : w(a) c_1 ... c_n = 1}`` from the character coefficients of ``f_w``."""
    _check_boundary(table, boundary)
    coeffs = list(coefficients) if coefficients is not None else word_coefficients(w, table, budget)
    n = len(boundary)
    sizes = math.prod(table.classes[c].size for c in boundary)
    conj = table.conjugate_index
    terms = [coeffs[conj[chi]] * _boundary_product(table, chi, boundary) * (sizes * Fraction(d) ** (1 - n))
             for chi, d in enumerate(table.degrees)]
    return _finish(terms, table.e)


def _normalizer(table: CharacterTable, kind: str, genus: int) -> Fraction:
    exponent = 2 * genus - 1 if kind == ORIENTABLE else genus - 1
    return Fraction(table.order) ** exponent


def tuple_sum_identity(table: CharacterTable, kind: str, genus: int, n: int) -> tuple[int, int]:
    """Sum of normalized bounded counts over all ordered n-tuples of classes, and |G|^n."""
    if n < 1:
        raise UsageError("n must be positive")
    h = len(table.classes)
    total = sum(count_surface(table, kind, genus, tup).value for tup in itertools.product(range(h), repeat=n))
    normalized = Fraction(total) / _normalizer(table, kind, genus)
    if normalized.denominator != 1:
        raise NonIntegerResult(f"normalized tuple sum {normalized} is not an integer")
    return int(normalized), table.order ** n


def linear_character_identity(table: CharacterTable, n: int) -> tuple[int, int, int]:
    """``|G|^n`` and the class-tuple sums over linear characters (all, and those with nu = 1)."""
    if n < 1:
        raise UsageError("n must be positive")
    h = len(table.classes)
    sizes = table.classes.sizes
    linear = [chi for chi, d in enumerate(table.degrees) if d == 1]
    real_linear = [chi for chi in linear if table.fs_indicators[chi] == 1]
    sums = []
    for chars in (linear, real_linear):
        total = Cyclotomic.rational(0, table.e)
        for tup in itertools.product(range(h), repeat=n):
            weight = math.prod(sizes[c] for c in tup)
            for chi in chars:
                total = total + _boundary_product(table, chi, tup) * weight
        if not total.is_rational_integer():
            raise NonIntegerResult(f"linear-character sum {total} is not an integer")
        sums.append(int(total))
    return table.order ** n, sums[0], sums[1]


def reorder_and_invert_invariance(table: CharacterTable, kind: str, genus: int, boundary: Sequence[int],
                                  permutation: Sequence[int]) -> bool:
    """Whether the count survives reordering the boundary (and, for nonorientable
    surfaces, replacing every boundary class by its inverse class)."""
    if sorted(permutation) != list(range(len(boundary))):
        raise UsageError(f"{permutation} is not a permutation of the boundary positions")
    base = count_surface(table, kind, genus, boundary).value
    reordered = [boundary[i] for i in permutation]
    ok = count_surface(table, kind, genus, reordered).value == base
    if kind == NONORIENTABLE:
        inverted = [table.classes.inverse_class[c] for c in boundary]
        ok = ok and count_surface(table, kind, genus, inverted).value == base
    return ok

"""Class functions: inner products, convolution and character coefficients.

For a word w in F_r the counting function ``f_w(x) = #{a : w(a) = x}`` is a
class function, and its coefficients against the irreducible characters
are what every counting formula in :mod:`surfhom.counting` consumes.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .chartable import CharacterTable, generalized_indicator
from .cyclotomic import Cyclotomic, as_cyclotomic
from .errors import GenericShape, GroupMismatch, RankMismatch, UsageError
from .groups import FiniteGroup
from .words import Generic, Word, WordShape

Value = Union[int, Fraction, Cyclotomic]


class ClassFunction:
    """A function on G that is constant on conjugacy classes, stored classwise."""

    def __init__(self, group: FiniteGroup, values: Sequence[Value]):
        if len(values) != len(group.classes):
            raise UsageError(f"{len(values)} values for {len(group.classes)} classes")
        self.group = group
        self.values: list[Cyclotomic] = [as_cyclotomic(v, group.exponent) for v in values]

    @classmethod
    def from_character(cls, table: CharacterTable, chi: int) -> "ClassFunction":
        return cls(table.group, table.values[chi])

    @classmethod
    def delta_identity(cls, G: FiniteGroup) -> "ClassFunction":
        return cls(G, [1] + [0] * (len(G.classes) - 1))

    def __call__(self, element: int) -> Cyclotomic:
        return self.values[self.group.classes.class_of[element]]

    def _check(self, other: "ClassFunction") -> None:
        if other.group is not self.group:
            raise GroupMismatch("class functions live on different groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def scale(self, c: Value) -> "ClassFunction":
        return ClassFunction(self.group, [v * c for v in self.values])

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and other.group is self.group and other.values == self.values

    def as_ints(self) -> list[int]:
        return [int(v) for v in self.values]

    def __repr__(self) -> str:
        return "ClassFunction([" + ", ".join(str(v) for v in self.values) + "])"


def inner_product(f1: ClassFunction, f2: ClassFunction) -> Cyclotomic:
    """``(1/|G|) * sum_g f1(g) * conj(f2(g))``."""
    f1._check(f2)
    G = f1.group
    total = Cyclotomic.rational(0, G.exponent)
    for size, a, b in zip(G.classes.sizes, f1.values, f2.values):
        total = total + size * a * b.conjugate()
    return total / G.order


def coefficients_from_class_function(f: ClassFunction, table: CharacterTable) -> list[Cyclotomic]:
    """Coefficients of ``f`` in the basis of irreducible characters."""
    if table.group is not f.group:
        raise GroupMismatch("class function and table belong to different groups")
    return [inner_product(f, ClassFunction.from_character(table, i)) for i in range(len(table))]


def expand(coefficients: Sequence[Value], table: CharacterTable) -> ClassFunction:
    """``sum_chi a_chi * chi`` as a class function."""
    h = len(table.classes)
    values = []
    for c in range(h):
        total = Cyclotomic.rational(0, table.e)
        for a, row in zip(coefficients, table.values):
            total = total + row[c] * a
        values.append(total)
    return ClassFunction(table.group, values)


def _block_coefficient(kind: str, param: int, table: CharacterTable, chi: int) -> Fraction:
    if kind == "power":
        return Fraction(generalized_indicator(table, chi, param))
    m = param
    eps = 1 if m % 2 == 0 else 2
    return Fraction(table.order ** (m - 1), table.degrees[chi] ** (m - eps))


def closed_form_coefficients(shape: WordShape, table: CharacterTable) -> list[Cyclotomic]:
    """Character coefficients of ``f_w`` for a recognised word shape.

    Each block contributes either ``nu_n(chi)`` (an n-th power) or
    ``|G|^(m-1) / chi(1)^(m - eps_m)`` (an m-fold generalized commutator, with
    ``eps_m`` 1 for even and 2 for odd m); blocks on disjoint letters combine
    by the convolution rule ``(|G|/chi(1))^(B-1) * prod``.  Unused generators
    each multiply by |G|.
    """
    if isinstance(shape, Generic):
        raise GenericShape("no closed form for a generic word; use the oracle")
    N = table.order
    out = []
    for chi, d in enumerate(table.degrees):
        value = Fraction(N, d) ** (len(shape.blocks) - 1) * N ** shape.unused
        for kind, param in shape.blocks:
            value *= _block_coefficient(kind, param, table, chi)
        out.append(Cyclotomic.rational(value, table.e))
    return out


def convolution(fs: Sequence[ClassFunction], table: CharacterTable) -> ClassFunction:
    """``F(w) = sum over u_1 ... u_m = w of f_1(u_1) ... f_m(u_m)``, via characters."""
    if not fs:
        raise UsageError("convolution of an empty list")
    for f in fs[1:]:
        fs[0]._check(f)
    coeffs = [coefficients_from_class_function(f, table) for f in fs]
    m = len(fs)
    combined = []
    for chi, d in enumerate(table.degrees):
        value = Cyclotomic.rational(Fraction(table.order, d) ** (m - 1), table.e)
        for c in coeffs:
            value = value * c[chi]
        combined.append(value)
    return expand(combined, table)


def convolution_direct(fs: Sequence[ClassFunction]) -> ClassFunction:
    """Same as :func:`convolution` by summing over group elements; O(|G|^2) per factor."""
    if not fs:
        raise UsageError("convolution of an empty list")
    G = fs[0].group
    for f in fs[1:]:
        fs[0]._check(f)
    table = G.table
    current = [fs[0](x) for x in range(G.order)]
    for f in fs[1:]:
        nxt_vals = [f(x) for x in range(G.order)]
        out = [Cyclotomic.rational(0, G.exponent)] * G.order
        for u in range(G.order):
            if current[u].is_zero():
                continue
            for x in range(G.order):
                v = nxt_vals[x]
                if not v.is_zero():
                    w = int(table[u, x])
                    out[w] = out[w] + current[u] * v
        current = out
    return ClassFunction(G, [current[c.representative] for c in G.classes])


def solomon_check(w: Word, G: FiniteGroup, budget=None) -> bool:
    """Whether |G| divides the number of solutions of ``w(a) = 1``."""
    from .oracle import word_histogram

    if w.rank <= 1:
        raise RankMismatch("the divisibility statement needs rank > 1")
    return word_histogram(w, G, budget)[G.identity] % G.order == 0


def is_virtual_character(coefficients: Sequence[Cyclotomic]) -> bool:
    return all(a.is_rational_integer() for a in coefficients)


"""Degree-n symmetric functions in the power-sum basis, and the identities
relating word counts in S_n to Schur functions.

Only the power-sum basis is materialized: a Schur function is stored through
its expansion ``s_lam = sum_mu chi^lam(mu) / z_mu * p_mu``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

from .chartable import symmetric_character_table
from .classfun import ClassFunction, closed_form_coefficients, coefficients_from_class_function
from .errors import NotSymmetricGroup, UsageError, WeightMismatch
from .groups import symmetric_group
from .partitions import (Partition, centralizer_order, class_size, contents, hook_product,
                         partitions_of, symmetric_group_character)
from .words import Generic, Word, commutators_word, recognize_shape, squares_word

SQUARES = "squares"
COMMUTATORS = "commutators"
GENFUN_MAX_N = 40


class PBasisVector:
    """Element of Lambda^n as exact rational coefficients on the p_mu."""

    def __init__(self, n: int, coeffs: Mapping[Iterable[int], Fraction] | None = None):
        self.n = n
        self.coeffs: dict[Partition, Fraction] = {}
        for mu, c in (coeffs or {}).items():
            mu = Partition(mu)
            if mu.weight != n:
                raise WeightMismatch(f"p_{mu} does not have degree {n}")
            c = Fraction(c)
            if c:
                self.coeffs[mu] = self.coeffs.get(mu, Fraction(0)) + c

    def __getitem__(self, mu) -> Fraction:
        return self.coeffs.get(Partition(mu), Fraction(0))

    def _check(self, other: "PBasisVector") -> None:
        if other.n != self.n:
            raise WeightMismatch(f"degree {self.n} vs degree {other.n}")

    def __add__(self, other: "PBasisVector") -> "PBasisVector":
        self._check(other)
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, Fraction(0)) + c
        return PBasisVector(self.n, out)

    def __sub__(self, other: "PBasisVector") -> "PBasisVector":
        return self + other.scale(-1)

    def scale(self, c) -> "PBasisVector":
        return PBasisVector(self.n, {mu: v * c for mu, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PBasisVector):
            return NotImplemented
        return self.n == other.n and {k: v for k, v in self.coeffs.items() if v} == \
            {k: v for k, v in other.coeffs.items() if v}

    def inner(self, other: "PBasisVector") -> Fraction:
        """Hall inner product, ``<p_lam, p_mu> = delta * z_lam``."""
        self._check(other)
        return sum((c * other[mu] * centralizer_order(mu) for mu, c in self.coeffs.items()), Fraction(0))

    def evaluate_ones(self, q: int) -> Fraction:
        """Principal specialization at q ones: ``p_mu(1^q) = q**length(mu)``."""
        return sum((c * Fraction(q) ** mu.length for mu, c in self.coeffs.items()), Fraction(0))

    def __repr__(self) -> str:
        terms = [f"{c}*p{mu}" for mu, c in sorted(self.coeffs.items(), reverse=True)]
        return f"PBasisVector({self.n}: " + (" + ".join(terms) or "0") + ")"


def _check_symmetric(f: ClassFunction) -> None:
    if not f.group.is_symmetric_group():
        raise NotSymmetricGroup(f"{f.group} is not a full symmetric group")


def ch(f: ClassFunction) -> PBasisVector:
    """``(1/n!) sum_w f(w) p_cycletype(w)``; the coefficient of p_mu is f(mu)/z_mu."""
    _check_symmetric(f)
    G = f.group
    out = {}
    for i, value in enumerate(f.values):
        mu = Partition(G.classes.cycle_type(i))
        out[mu] = value.to_fraction() / centralizer_order(mu)
    return PBasisVector(G.degree, out)


def class_function_from_p(vec: PBasisVector, G) -> ClassFunction:
    """Inverse of :func:`ch` on a given symmetric group."""
    if not G.is_symmetric_group() or G.degree != vec.n:
        raise NotSymmetricGroup(f"{G} is not S_{vec.n}")
    return ClassFunction(G, [vec[G.classes.cycle_type(i)] * centralizer_order(Partition(G.classes.cycle_type(i)))
                             for i in range(len(G.classes))])


def schur_in_p(lam: Iterable[int]) -> PBasisVector:
    lam = Partition(lam)
    n = lam.weight
    return PBasisVector(n, {mu: Fraction(symmetric_group_character(lam, mu), centralizer_order(mu))
                            for mu in partitions_of(n)})


def schur_combination(coeffs: Mapping[Partition, Fraction], n: int) -> PBasisVector:
    total = PBasisVector(n)
    for lam, a in coeffs.items():
        total = total + schur_in_p(lam).scale(a)
    return total


def word_power_sum_average(w: Word, n: int, budget=None) -> PBasisVector:
    """``(1/n!) sum over u in S_n^r of p_cycletype(w(u))``, by enumeration."""
    from .oracle import oracle_class_function

    G = symmetric_group(n)
    f = oracle_class_function(w, G, budget)
    out = {}
    for i, value in enumerate(f.values):
        mu = Partition(G.classes.cycle_type(i))
        out[mu] = value.to_fraction() * Fraction(class_size(mu), math.factorial(n))
    return PBasisVector(n, out)


def word_schur_coefficients(w: Word, n: int, budget=None) -> dict[Partition, Fraction]:
    """``a_lam`` with ``f_w = sum_lam a_lam chi^lam`` on S_n, keyed by partition."""
    G = symmetric_group(n)
    table = symmetric_character_table(G)
    shape = recognize_shape(w)
    if isinstance(shape, Generic):
        from .oracle import oracle_class_function

        coeffs = coefficients_from_class_function(oracle_class_function(w, G, budget), table)
    else:
        coeffs = closed_form_coefficients(shape, table)
    return {lam: a.to_fraction() for lam, a in zip(table.labels, coeffs)}


def word_schur_side(w: Word, n: int, budget=None) -> PBasisVector:
    """``sum_lam a_lam s_lam`` in the power-sum basis."""
    return schur_combination(word_schur_coefficients(w, n, budget), n)


def _hook_exponent(kind: str, param: int, shift: int) -> int:
    if kind == SQUARES:
        if param < 1:
            raise UsageError("k must be at least 1")
        return param - shift
    if kind == COMMUTATORS:
        if param < 1:
            raise UsageError("g must be at least 1")
        return 2 * param - shift
    raise UsageError(f"unknown word family {kind!r}")


def _family_word(kind: str, param: int) -> Word:
    return squares_word(param) if kind == SQUARES else commutators_word(param)


def hook_schur_side(kind: str, param: int, n: int) -> PBasisVector:
    """``sum_lam H_lam^(k-1) s_lam`` (squares) or ``H_lam^(2g-1) s_lam`` (commutators)."""
    e = _hook_exponent(kind, param, 1)
    return schur_combination({lam: Fraction(hook_product(lam)) ** e for lam in partitions_of(n)}, n)


def specialized_identity_check(kind: str, param: int, n: int, q: int, budget=None) -> tuple[Fraction, Fraction]:
    """Both sides of the specialization at q ones.

    Left: ``(1/n!) sum_u q**(number of cycles of w(u))`` by enumeration over
    S_n.  Right: ``sum_lam H_lam^(k-2) prod_cells (q + content)`` (or
    ``2g-2`` for commutators).
    """
    from .oracle import oracle_class_function

    e = _hook_exponent(kind, param, 2)
    G = symmetric_group(n)
    f = oracle_class_function(_family_word(kind, param), G, budget)
    left = Fraction(0)
    for i, value in enumerate(f.values):
        mu = Partition(G.classes.cycle_type(i))
        left += value.to_fraction() * class_size(mu) * Fraction(q) ** mu.length
    left /= math.factorial(n)
    right = sum((Fraction(hook_product(lam)) ** e * math.prod(q + c for c in contents(lam))
                 for lam in partitions_of(n)), Fraction(0))
    return left, right


def genfun_coefficients(exponent: int, N: int) -> list:
    """Coefficients of ``sum_n sum_{lam |- n} (n!/H_lam)^exponent x^n`` for n = 0..N."""
    if not 0 <= N <= GENFUN_MAX_N:
        raise UsageError(f"N must lie in 0..{GENFUN_MAX_N}")
    out = []
    for n in range(N + 1):
        fact = math.factorial(n)
        # n!/H_lam is an integer (the degree of chi^lam)
        degrees = [fact // hook_product(lam) for lam in partitions_of(n)]
        if exponent >= 0:
            out.append(sum(d ** exponent for d in degrees))
        else:
            total = sum((Fraction(1, d ** -exponent) for d in degrees), Fraction(0))
            out.append(int(total) if total.denominator == 1 else total)
    return out

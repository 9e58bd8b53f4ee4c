"""Named identity suites, each a list of exact lhs/rhs comparisons.

Every record is a plain dict with string values so that suites serialize to
byte-stable JSON regardless of how the oracle is parallelized.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

from .chartable import character_table
from .classfun import solomon_check
from .counting import (NONORIENTABLE, ORIENTABLE, linear_character_identity, tuple_sum_identity)
from .groups import FiniteGroup, parse_group_spec
from .oracle import Budget, word_histogram
from .partitions import hook_product, partition_numbers, partitions_of, symmetric_group_character
from .symfunc import (COMMUTATORS, SQUARES, genfun_coefficients, specialized_identity_check,
                      word_power_sum_average, word_schur_side)
from .words import parse_word

ZOO = ("builtin:sym:3", "builtin:sym:4", "builtin:alt:4", "builtin:dih:4",
       "builtin:q8", "builtin:cyc:6", "builtin:cyc:7")

SOLOMON_WORDS = (
    ("[x1,x2]", 2), ("x1^2 x2^2", 2), ("x1 x2", 2), ("x1^2 x2^3", 2),
    ("x1 x2 x1^-1 x2", 2), ("[x1,x2,x3]", 3), ("[x1,x2]^2", 2), ("x1^3 [x2,x1]", 2),
)
SCHUR_IDENTITY_WORDS = (("x1^2", 1), ("x1^2 x2^2", 2), ("[x1,x2]", 2))

_groups: dict[str, FiniteGroup] = {}


def zoo_group(spec: str) -> FiniteGroup:
    if spec not in _groups:
        _groups[spec] = parse_group_spec(spec)
    return _groups[spec]


def _record(ok: bool, lhs, rhs, **params) -> dict:
    return {"ok": ok, "lhs": str(lhs), "rhs": str(rhs), **{k: str(v) for k, v in params.items()}}


def suite_solomon(budget: Budget) -> list[dict]:
    out = []
    for spec in ZOO:
        G = zoo_group(spec)
        for text, rank in SOLOMON_WORDS:
            w = parse_word(text, rank)
            fixed = word_histogram(w, G, budget)[G.identity]
            out.append(_record(solomon_check(w, G, budget), fixed, f"0 mod {G.order}",
                               group=spec, word=text, rank=rank))
    return out


def suite_tuple_sum(budget: Budget) -> list[dict]:
    out = []
    for spec in ZOO:
        T = character_table(zoo_group(spec))
        for kind, genera in ((ORIENTABLE, (1, 2)), (NONORIENTABLE, (1, 2, 3))):
            for genus in genera:
                for n in (1, 2):
                    lhs, rhs = tuple_sum_identity(T, kind, genus, n)
                    out.append(_record(lhs == rhs, lhs, rhs, group=spec, kind=kind, genus=genus, n=n))
    return out


def suite_linear_limit(budget: Budget) -> list[dict]:
    out = []
    for spec in ZOO:
        T = character_table(zoo_group(spec))
        for n in (1, 2):
            total, linear, real_linear = linear_character_identity(T, n)
            out.append(_record(total == linear == real_linear, total, f"{linear},{real_linear}", group=spec, n=n))
    return out


def suite_schur_identity(budget: Budget) -> list[dict]:
    out = []
    for n in range(1, 5):
        for text, rank in SCHUR_IDENTITY_WORDS:
            w = parse_word(text, rank)
            lhs, rhs = word_power_sum_average(w, n, budget), word_schur_side(w, n, budget)
            out.append(_record(lhs == rhs, lhs, rhs, word=text, n=n))
    for n in range(1, 9):
        for lam in partitions_of(n):
            lhs = Fraction(math.factorial(n), hook_product(lam))
            rhs = symmetric_group_character(lam, (1,) * n)
            out.append(_record(lhs == rhs, lhs, rhs, check="hook-length", partition=lam))
    return out


def suite_specialization(budget: Budget) -> list[dict]:
    out = []
    for kind, param in ((SQUARES, 1), (SQUARES, 2), (COMMUTATORS, 1)):
        for n in range(1, 6):
            for q in (1, 2, 3):
                lhs, rhs = specialized_identity_check(kind, param, n, q, budget)
                out.append(_record(lhs == rhs, lhs, rhs, kind=kind, param=param, n=n, q=q))
    return out


def suite_genfun(budget: Budget) -> list[dict]:
    coeffs = genfun_coefficients(0, 40)
    expected = partition_numbers(40)
    return [_record(a == b, a, b, n=n) for n, (a, b) in enumerate(zip(coeffs, expected))]


SUITES: dict[str, Callable[[Budget], list[dict]]] = {
    "solomon": suite_solomon,
    "tuple-sum": suite_tuple_sum,
    "linear-limit": suite_linear_limit,
    "symfunc-theorem": suite_schur_identity,
    "specialization": suite_specialization,
    "genfun": suite_genfun,
}


def run_suite(name: str, budget: Budget | None = None) -> list[dict]:
    return SUITES[name](budget or Budget())

"""Brute-force ground truth by exhaustive enumeration of assignments.

The assignment space G^r is walked in row-major order of element indices.
With several workers the range of the first generator is cut into contiguous
slices; each worker fills a private histogram and the histograms are summed,
so the result does not depend on the worker count.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .classfun import ClassFunction
from .errors import BudgetExceeded, OracleMismatch
from .groups import FiniteGroup
from .words import Word

DEFAULT_MAX_TUPLES = 10 ** 8
CHUNK = 1 << 18


def _default_max_tuples() -> int:
    env = os.environ.get("SURFHOM_BUDGET")
    return int(env) if env else DEFAULT_MAX_TUPLES


@dataclass(frozen=True)
class Budget:
    max_tuples: int = field(default_factory=_default_max_tuples)
    workers: int = 1

    def check(self, tuples: int, what: str) -> None:
        if tuples > self.max_tuples:
            raise BudgetExceeded(f"{what} needs {tuples} tuples, budget is {self.max_tuples}")


def _power_table(G: FiniteGroup, n: int) -> np.ndarray:
    return np.array([G.power(g, n) for g in range(G.order)], dtype=np.int64)


def _slice_histogram(w: Word, G: FiniteGroup, powers: dict, lo: int, hi: int) -> np.ndarray:
    n, r = G.order, w.rank
    table = G.table
    hist = np.zeros(n, dtype=np.int64)
    for start in range(lo, hi, CHUNK):
        flat = np.arange(start, min(start + CHUNK, hi), dtype=np.int64)
        coords = np.unravel_index(flat, (n,) * r)
        res = np.zeros(len(flat), dtype=np.int64)
        for gen, exp in w.letters:
            res = table[res, powers[exp][coords[gen - 1]]]
        hist += np.bincount(res, minlength=n)
    return hist


def word_histogram(w: Word, G: FiniteGroup, budget: Budget | None = None) -> list[int]:
    """``hist[x] = #{assignments a in G^r : w(a) = x}`` for every element x."""
    budget = budget or Budget()
    n, r = G.order, w.rank
    total = n ** r
    budget.check(total, f"enumerating G^{r} with |G| = {n}")
    if r == 0:
        hist = [0] * n
        hist[G.identity] = 1
        return hist
    powers = {exp: _power_table(G, exp) for exp in {e for _, e in w.letters}}
    block = n ** (r - 1)
    workers = max(1, min(budget.workers, n))
    cuts = [round(i * n / workers) for i in range(workers + 1)]
    ranges = [(cuts[i] * block, cuts[i + 1] * block) for i in range(workers)]
    if workers == 1:
        parts = [_slice_histogram(w, G, powers, *ranges[0])]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda rg: _slice_histogram(w, G, powers, *rg), ranges))
    hist = sum(parts[1:], parts[0])
    return [int(x) for x in hist]


def oracle_class_function(w: Word, G: FiniteGroup, budget: Budget | None = None) -> ClassFunction:
    """``f(x) = #{a in G^r : w(a) = x}`` per conjugacy class, by enumeration."""
    hist = word_histogram(w, G, budget)
    classes = G.classes
    values = []
    for c in classes:
        counts = {hist[m] for m in c.members}
        if len(counts) != 1:
            raise OracleMismatch(f"word count is not constant on the class of {G.elements[c.representative]}")
        values.append(counts.pop())
    return ClassFunction(G, values)


def boundary_products(G: FiniteGroup, boundary: Sequence[int]) -> np.ndarray:
    """Products c_1 ... c_n over every tuple in C_1 x ... x C_n, row-major."""
    classes = G.classes
    prods = np.array([G.identity], dtype=np.int64)
    table = G.table
    for ci in boundary:
        members = np.asarray(classes[ci].members, dtype=np.int64)
        prods = table[prods[:, None], members[None, :]].ravel().astype(np.int64)
    return prods


def oracle_count_with_boundary(w: Word, G: FiniteGroup, boundary: Sequence[int],
                               budget: Budget | None = None) -> int:
    """``#{(a, c) in G^r x C_1 x ... x C_n : w(a) c_1 ... c_n = 1}``."""
    budget = budget or Budget()
    classes = G.classes
    total = G.order ** w.rank * math.prod(classes[i].size for i in boundary)
    budget.check(total, f"enumerating G^{w.rank} x {len(boundary)} boundary classes")
    hist = np.asarray(word_histogram(w, G, budget), dtype=np.int64)
    prods = boundary_products(G, boundary)
    inv = np.asarray(G.inverse, dtype=np.int64)
    return int(hist[inv[prods]].sum())


def oracle_nth_root_counts(G: FiniteGroup, n: int) -> ClassFunction:
    """Number of n-th roots of each class representative."""
    powers = _power_table(G, n)
    hist = np.bincount(powers, minlength=G.order)
    return ClassFunction(G, [int(hist[c.representative]) for c in G.classes])

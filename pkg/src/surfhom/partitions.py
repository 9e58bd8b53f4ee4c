"""Integer partitions, Young diagram statistics and symmetric group characters."""
from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Iterable

from .errors import WeightMismatch


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts if p)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition._trusted(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self) for j in range(row)]

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        # parts already positive and weakly decreasing
        return tuple.__new__(cls, parts)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    return list(_partitions_of(n))


@lru_cache(maxsize=64)
def _partitions_of(n: int) -> tuple[Partition, ...]:
    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition._trusted(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def hook_lengths(lam: Partition) -> list[int]:
    conj = lam.conjugate()
    return [lam[i] - j + conj[j] - i - 1 for i, j in lam.cells()]


def hook_product(lam: Partition) -> int:
    conj = lam.conjugate()
    return math.prod(row - j + conj[j] - i - 1 for i, row in enumerate(lam) for j in range(row))


def contents(lam: Partition) -> list[int]:
    return [j - i for i, j in lam.cells()]


def centralizer_order(mu: Partition) -> int:
    """z_mu = prod_i i**m_i * m_i!, the centralizer order of cycle type mu."""
    return math.prod(i ** m * math.factorial(m) for i, m in mu.multiplicities().items())


def class_size(mu: Partition) -> int:
    return math.factorial(mu.weight) // centralizer_order(mu)


def power_cycle_type(mu: Partition, n: int) -> Partition:
    """Cycle type of w**n when w has cycle type mu."""
    parts = []
    for ell in mu:
        g = math.gcd(ell, n)
        parts.extend([ell // g] * g)
    return Partition(parts)


def sign(mu: Partition) -> int:
    return -1 if (mu.weight - mu.length) % 2 else 1


def symmetric_group_character(lam: Iterable[int], mu: Iterable[int]) -> int:
    """chi^lam evaluated on cycle type mu, by the Murnaghan-Nakayama rule."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise WeightMismatch(f"|{lam}| = {lam.weight} but |{mu}| = {mu.weight}")
    return _murnaghan_nakayama(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def _murnaghan_nakayama(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    # rim hooks of length r correspond to sliding one bead r places down in the beta-set
    L = len(lam)
    beads = [part + L - 1 - i for i, part in enumerate(lam)]
    occupied = set(beads)
    total = 0
    for b in beads:
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for c in beads if t < c < b)
        moved = sorted((t if c == b else c for c in beads), reverse=True)
        smaller = tuple(x for x in (c - (L - 1 - i) for i, c in enumerate(moved)) if x)
        total += (-1) ** height * _murnaghan_nakayama(smaller, rest)
    return total


def partition_numbers(N: int) -> list[int]:
    """p(0), ..., p(N) from Euler's pentagonal-number recurrence."""
    p = [1] + [0] * N
    for n in range(1, N + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p

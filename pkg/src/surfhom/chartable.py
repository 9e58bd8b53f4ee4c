"""Exact complex character tables.

The tables are computed with Dixon's method: simultaneous eigenvectors of the
class matrices over a prime field give the central characters mod p, the
degrees follow from orthogonality, and every value is lifted into Q(zeta_e)
by recovering eigenvalue multiplicities with a discrete Fourier sum.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from .cyclotomic import Cyclotomic
from .errors import (LiftInconsistent, NonIndicatorValue, NonIntegerIndicator,
                     NotSymmetricGroup, PrimeSearchFailed)
from .groups import ConjugacyClassTable, FiniteGroup
from .partitions import Partition, symmetric_group_character

PRIME_SEARCH_LIMIT = 10 ** 7


def structure_constants(G: FiniteGroup, classes: ConjugacyClassTable | None = None) -> np.ndarray:
    """``a[i, j, k] = #{(x, y) in C_i x C_j : x*y = rep(C_k)}``."""
    classes = classes or G.classes
    h = len(classes)
    class_of = np.asarray(classes.class_of)
    inv = np.asarray(G.inverse)
    a = np.zeros((h, h, h), dtype=np.int64)
    table = G.table
    for k, c in enumerate(classes):
        ys = table[inv, c.representative]  # y = x^-1 * z for every x
        np.add.at(a[:, :, k], (class_of, class_of[ys]), 1)
    return a


# linear algebra over GF(p); vectors are lists of ints in [0, p)

def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat[0])
    red, pivots = _rref(mat, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


def _split_space(basis: list[list[int]], pivots: list[int], M: list[list[int]], p: int):
    """Eigenspaces of M restricted to the invariant span of ``basis`` (in RREF)."""
    d = len(basis)
    images = [[sum(m * x for m, x in zip(row, b)) % p for row in M] for b in basis]
    # column i of A holds the coordinates of M*b_i, read off at the pivots
    A = [[images[i][pivots[t]] for i in range(d)] for t in range(d)]
    pieces = []
    found = 0
    for lam in range(p):
        shifted = [[(A[t][i] - (lam if t == i else 0)) % p for i in range(d)] for t in range(d)]
        null = _nullspace(shifted, p)
        if not null:
            continue
        vecs = [[sum(c * b[k] for c, b in zip(v, basis)) % p for k in range(len(basis[0]))] for v in null]
        pieces.append(_rref(vecs, p))
        found += len(null)
        if found == d:
            break
    if found != d:
        raise LiftInconsistent("class matrix is not diagonalizable mod p")
    return pieces


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def dixon_prime(order: int, e: int) -> int:
    """Smallest prime p = 1 mod e with p > 2*sqrt(order) and p >= 101."""
    lower = max(101, 2 * math.isqrt(order) + 1)
    p = lower + (1 - lower) % e
    while p < PRIME_SEARCH_LIMIT:
        if p * p > 4 * order and _is_prime(p):
            return p
        p += e
    raise PrimeSearchFailed(f"no suitable prime below {PRIME_SEARCH_LIMIT} for e={e}")


def _primitive_root_of_unity(e: int, p: int) -> int:
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return pow(g, (p - 1) // e, p)
    raise PrimeSearchFailed(f"no primitive root mod {p}")


@dataclass
class CharacterTable:
    group: FiniteGroup
    classes: ConjugacyClassTable
    values: list[list[Cyclotomic]]
    degrees: list[int]
    fs_indicators: list[int] = field(default_factory=list)
    labels: list | None = None

    def __post_init__(self):
        self.validate()
        if not self.fs_indicators:
            self.fs_indicators = [fs_indicator(self, i) for i in range(len(self.values))]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def e(self) -> int:
        return self.group.exponent

    @cached_property
    def conjugate_index(self) -> list[int]:
        """``conjugate_index[i]`` is the row of the complex conjugate of character i."""
        rows = {tuple(r): i for i, r in enumerate(self.values)}
        return [rows[tuple(v.conjugate() for v in row)] for row in self.values]

    def value(self, chi: int, element: int) -> Cyclotomic:
        return self.values[chi][self.classes.class_of[element]]

    def validate(self) -> None:
        """Check every structural identity exactly; raise LiftInconsistent otherwise."""
        G, C = self.group, self.classes
        sizes = C.sizes
        h = len(C)
        if len(self.values) != h:
            raise LiftInconsistent(f"{len(self.values)} characters for {h} classes")
        if sum(d * d for d in self.degrees) != G.order:
            raise LiftInconsistent("sum of squared degrees differs from |G|")
        if any(G.order % d for d in self.degrees):
            raise LiftInconsistent("a degree does not divide |G|")
        conj = [[v.conjugate() for v in row] for row in self.values]
        for i in range(h):
            for j in range(i, h):
                s = sum((sizes[c] * self.values[i][c] * conj[j][c] for c in range(h)), Cyclotomic.rational(0, self.e))
                if s != (G.order if i == j else 0):
                    raise LiftInconsistent(f"row orthogonality fails for characters {i}, {j}")
        for a in range(h):
            for b in range(a, h):
                s = sum((self.values[i][a] * conj[i][b] for i in range(h)), Cyclotomic.rational(0, self.e))
                if s != (Fraction(G.order, sizes[a]) if a == b else 0):
                    raise LiftInconsistent(f"column orthogonality fails for classes {a}, {b}")

    def __str__(self) -> str:
        C = self.classes
        lines = ["class  " + "  ".join(f"#{i}" for i in range(len(C))),
                 "size   " + "  ".join(str(s) for s in C.sizes)]
        for i, row in enumerate(self.values):
            lines.append(f"chi{i} (deg {self.degrees[i]}, nu {self.fs_indicators[i]:+d}): "
                         + ", ".join(str(v) for v in row))
        return "\n".join(lines)


def _row_order(degree: int, row: list[Cyclotomic]):
    # trivial character first, then by degree and values
    trivial = all(v == 1 for v in row)
    return (not trivial, degree, [v.sort_key() for v in row])


def compute_character_table(G: FiniteGroup, classes: ConjugacyClassTable | None = None) -> CharacterTable:
    classes = classes or G.classes
    h = len(classes)
    sizes = classes.sizes
    e = G.exponent
    p = dixon_prime(G.order, e)
    a = structure_constants(G, classes) % p

    # simultaneous eigenvectors of the class matrices M_j[k][l] = a[j, k, l]
    spaces = [_rref([[int(i == j) for j in range(h)] for i in range(h)], p)]
    for j in range(1, h):
        if all(len(b) == 1 for b, _ in spaces):
            break
        M = a[j].tolist()
        nxt = []
        for basis, pivots in spaces:
            nxt.extend([(basis, pivots)] if len(basis) == 1 else _split_space(basis, pivots, M, p))
        spaces = nxt
    if any(len(b) != 1 for b, _ in spaces):
        raise LiftInconsistent("class matrices do not separate the characters")

    z = _primitive_root_of_unity(e, p)
    inv_e = pow(e, -1, p)
    power_classes = [[classes.power_class(l, k) for k in range(e)] for l in range(h)]
    rows: list[tuple[int, list[Cyclotomic]]] = []
    for basis, _ in spaces:
        v = basis[0]
        if v[0] == 0:
            raise LiftInconsistent("central character vanishes on the identity")
        inv0 = pow(v[0], -1, p)
        omega = [x * inv0 % p for x in v]
        norm = sum(omega[l] * omega[classes.inverse_class[l]] * pow(sizes[l], -1, p) for l in range(h)) % p
        target = G.order * pow(norm, -1, p) % p
        d = next((d for d in range(1, math.isqrt(G.order) + 1) if d * d % p == target), None)
        if d is None:
            raise LiftInconsistent("no admissible degree for a central character")
        chi_p = [d * omega[l] * pow(sizes[l], -1, p) % p for l in range(h)]

        row = []
        for l in range(h):
            mults = []
            for jj in range(e):
                m = sum(chi_p[power_classes[l][k]] * pow(z, (-jj * k) % e, p) for k in range(e)) * inv_e % p
                if m > d:
                    raise LiftInconsistent(f"eigenvalue multiplicity {m} exceeds degree {d}")
                mults.append(m)
            if sum(mults) != d:
                raise LiftInconsistent("eigenvalue multiplicities do not sum to the degree")
            row.append(Cyclotomic(e, mults))
        rows.append((d, row))

    rows.sort(key=lambda r: _row_order(r[0], r[1]))
    return CharacterTable(G, classes, [r for _, r in rows], [d for d, _ in rows])


def symmetric_character_table(G: FiniteGroup, classes: ConjugacyClassTable | None = None) -> CharacterTable:
    """Character table of S_n from the Murnaghan-Nakayama rule, labelled by partitions."""
    if not G.is_symmetric_group():
        raise NotSymmetricGroup(f"{G} is not the full symmetric group on its points")
    classes = classes or G.classes
    n = G.degree
    from .partitions import partitions_of

    cycle_types = [Partition(classes.cycle_type(i)) for i in range(len(classes))]
    rows = []
    for lam in partitions_of(n):
        vals = [Cyclotomic.rational(symmetric_group_character(lam, mu), G.exponent) for mu in cycle_types]
        rows.append((int(vals[0]), vals, lam))
    rows.sort(key=lambda r: _row_order(r[0], r[1]))
    return CharacterTable(G, classes, [r[1] for r in rows], [r[0] for r in rows], labels=[r[2] for r in rows])


def character_table(G: FiniteGroup) -> CharacterTable:
    """Cached Dixon table of ``G``."""
    cached = getattr(G, "_character_table", None)
    if cached is None:
        cached = compute_character_table(G)
        G._character_table = cached
    return cached


def _power_sum(table: CharacterTable, chi: int, n: int) -> Cyclotomic:
    C = table.classes
    total = Cyclotomic.rational(0, table.e)
    for l, size in enumerate(C.sizes):
        total = total + size * table.values[chi][C.power_class(l, n)]
    return total / table.order


def generalized_indicator(table: CharacterTable, chi: int, n: int) -> int:
    """``(1/|G|) * sum_g chi(g**n)``, the number-of-n-th-roots multiplicity."""
    value = _power_sum(table, chi, n)
    if not value.is_rational_integer():
        raise NonIntegerIndicator(f"nu_{n} of character {chi} is {value}")
    return int(value)


def fs_indicator(table: CharacterTable, chi: int) -> int:
    value = _power_sum(table, chi, 2)
    if not value.is_rational_integer() or int(value) not in (-1, 0, 1):
        raise NonIndicatorValue(f"Frobenius-Schur indicator of character {chi} is {value}")
    return int(value)


def central_character(table: CharacterTable, chi: int, cls: int) -> Cyclotomic:
    """``omega_chi(C+) = |C| * chi(C) / chi(1)``."""
    return table.values[chi][cls] * table.classes[cls].size / table.degrees[chi]


def match_rows(a: CharacterTable, b: CharacterTable) -> list[int]:
    """Row permutation taking table ``a`` to table ``b`` (same group and classes)."""
    index = {tuple(row): i for i, row in enumerate(b.values)}
    try:
        return [index[tuple(row)] for row in a.values]
    except KeyError:
        raise LiftInconsistent("character tables differ") from None


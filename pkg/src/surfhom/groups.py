"""Finite permutation groups: closure, conjugacy classes, exponent.

Elements are stored as :class:`Permutation` objects and addressed everywhere
else by their index in :attr:`FiniteGroup.elements`.  The identity always has
index 0.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import GroupSpecError, InvalidPermutation, OrderCapExceeded

DEFAULT_ORDER_CAP = 2000
MAX_POINTS = 64


class Permutation:
    """A bijection of ``{0, ..., m-1}`` given by its list of images.

    Products compose right to left: ``(p * q)[i] == p[q[i]]``.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"images {images} are not a bijection of 0..{len(images) - 1}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(m))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], m: int) -> "Permutation":
        images = list(range(m))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < m:
                    raise InvalidPermutation(f"point {a} outside 0..{m - 1}")
                if a in seen:
                    raise InvalidPermutation(f"point {a} appears in more than one cycle")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise InvalidPermutation("degree mismatch in product")
        p = self.images
        return Permutation(p[i] for i in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """All cycle lengths including fixed points, weakly decreasing."""
        moved = self.cycles()
        fixed = self.degree - sum(len(c) for c in moved)
        return tuple(sorted((len(c) for c in moved), reverse=True)) + (1,) * fixed

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(a + 1) for a in c) + ")" for c in cyc)


class FiniteGroup:
    """A permutation group closed under products of its generators."""

    def __init__(self, generators: Sequence[Permutation], order_cap: int = DEFAULT_ORDER_CAP,
                 name: str | None = None):
        if not generators:
            raise GroupSpecError("at least one generator is required")
        degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise InvalidPermutation("generators act on different numbers of points")
        self.generators = tuple(generators)
        self.degree = degree
        self.name = name

        ident = Permutation.identity(degree)
        elements = [ident]
        index_of = {ident: 0}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for s in self.generators:
                y = s * x
                if y not in index_of:
                    if len(elements) >= order_cap:
                        raise OrderCapExceeded(f"group order exceeds cap {order_cap}")
                    index_of[y] = len(elements)
                    elements.append(y)
                    queue.append(y)
        self.elements: list[Permutation] = elements
        self.index_of: dict[Permutation, int] = index_of
        self.identity = 0
        self.order = len(elements)
        self.inverse: list[int] = [index_of[x.inverse()] for x in elements]
        self.element_orders: list[int] = [x.order() for x in elements]
        self.exponent = reduce(math.lcm, self.element_orders, 1)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or 'perms'}, order={self.order})"

    @cached_property
    def table(self) -> np.ndarray:
        """Dense multiplication table, ``table[a, b] == index(a * b)``."""
        n, m = self.order, self.degree
        perms = np.array([x.images for x in self.elements], dtype=np.uint8)
        lookup = {perms[i].tobytes(): i for i in range(n)}
        out = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            prod = np.ascontiguousarray(perms[a][perms])  # row b holds a * b
            out[a] = [lookup[row.tobytes()] for row in prod]
        return out

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inverse[a], -n
        result, base = self.identity, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    @cached_property
    def classes(self) -> "ConjugacyClassTable":
        return conjugacy_classes(self)

    def is_symmetric_group(self) -> bool:
        return self.order == math.factorial(self.degree)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class ConjugacyClassTable:
    group: FiniteGroup
    classes: list[ConjugacyClass]
    class_of: list[int]
    inverse_class: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i: int) -> ConjugacyClass:
        return self.classes[i]

    @property
    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def power_class(self, i: int, n: int) -> int:
        """Class of ``g**n`` for ``g`` in class ``i``."""
        G = self.group
        return self.class_of[G.power(self.classes[i].representative, n)]

    def cycle_type(self, i: int) -> tuple[int, ...]:
        return self.group.elements[self.classes[i].representative].cycle_type()


def conjugacy_classes(G: FiniteGroup) -> ConjugacyClassTable:
    gens = [G.index_of[s] for s in G.generators]
    gen_inv = [G.inverse[s] for s in gens]
    table = G.table
    class_of = [-1] * G.order
    orbits: list[list[int]] = []
    for x in range(G.order):
        if class_of[x] >= 0:
            continue
        orbit = [x]
        class_of[x] = len(orbits)
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for s, si in zip(gens, gen_inv):
                z = int(table[table[s, y], si])
                if class_of[z] < 0:
                    class_of[z] = len(orbits)
                    orbit.append(z)
                    queue.append(z)
        orbits.append(sorted(orbit))

    # identity first, then by size, then by least member
    orbits.sort(key=lambda o: (o[0] != G.identity, len(o), o[0]))
    classes = [ConjugacyClass(o[0], tuple(o)) for o in orbits]
    class_of = [0] * G.order
    for ci, c in enumerate(classes):
        for m in c.members:
            class_of[m] = ci
    inverse_class = [class_of[G.inverse[c.representative]] for c in classes]
    return ConjugacyClassTable(G, classes, class_of, inverse_class)


def exponent(G: FiniteGroup) -> int:
    return G.exponent


# builtin groups

def _quaternion_generators() -> list[Permutation]:
    # element 4*s + u is (-1)**s * unit[u], units ordered 1, i, j, k
    unit_mul = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def left(u: int) -> Permutation:
        images = []
        for x in range(8):
            s, v = divmod(x, 4)
            sign, w = unit_mul[(u, v)]
            images.append(4 * ((s + sign) % 2) + w)
        return Permutation(images)

    return [left(1), left(2)]


def builtin_generators(name: str, n: int | None) -> list[Permutation]:
    if name == "q8":
        if n not in (None, 8):
            raise GroupSpecError("q8 takes no parameter")
        return _quaternion_generators()
    if n is None or n < 1:
        raise GroupSpecError(f"builtin {name} needs a positive parameter")
    if n > MAX_POINTS:
        raise GroupSpecError(f"parameter {n} exceeds {MAX_POINTS} points")
    cycle = Permutation.from_cycles([list(range(n))], n) if n > 1 else Permutation.identity(1)
    if name == "cyc":
        return [cycle]
    if name == "sym":
        if n < 3:
            return [cycle]
        return [Permutation.from_cycles([[0, 1]], n), cycle]
    if name == "alt":
        if n < 3:
            return [Permutation.identity(n)]
        return [Permutation.from_cycles([[0, 1, i]], n) for i in range(2, n)]
    if name == "dih":
        # order 2n; small cases realized as Z/2 and the Klein four-group
        if n == 1:
            return [Permutation.from_cycles([[0, 1]], 2)]
        if n == 2:
            return [Permutation.from_cycles([[0, 1]], 4), Permutation.from_cycles([[2, 3]], 4)]
        reflection = Permutation((-i) % n for i in range(n))
        return [cycle, reflection]
    raise GroupSpecError(f"unknown builtin group {name!r}")


def builtin_group(name: str, n: int | None = None, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if name in ("sym", "alt") and n is not None and math.factorial(n) // (1 if name == "sym" else 2) > order_cap:
        raise OrderCapExceeded(f"{name} {n} exceeds order cap {order_cap}")
    label = f"{name}:{n}" if n is not None else name
    return FiniteGroup(builtin_generators(name, n), order_cap=order_cap, name=label)


def symmetric_group(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    return builtin_group("sym", n, order_cap)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """Parse 1-based cycle notation like ``(1 2 3)(4 5)`` into 0-based cycles."""
    stripped = _CYCLE_RE.sub("", text).strip()
    if stripped:
        raise GroupSpecError(f"unexpected text {stripped!r} in permutation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
        if any(p < 1 or p > MAX_POINTS for p in pts):
            raise GroupSpecError(f"points must lie in 1..{MAX_POINTS}: {text!r}")
        if pts:
            cycles.append([p - 1 for p in pts])
    return cycles


def parse_group_spec(text: str, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from ``builtin:<name>:<param>`` or ``perms:`` text.

    For ``perms:`` the permutations follow one per line (``;`` also separates).
    """
    text = text.strip()
    if text.startswith("builtin:"):
        parts = [p.strip() for p in text.split(":")]
        if len(parts) not in (2, 3):
            raise GroupSpecError(f"malformed builtin spec {text!r}")
        name = parts[1]
        param = None
        if len(parts) == 3 and parts[2]:
            try:
                param = int(parts[2])
            except ValueError:
                raise GroupSpecError(f"non-integer parameter in {text!r}") from None
        return builtin_group(name, param, order_cap)
    if text.startswith("perms:"):
        lines = [ln.strip() for ln in re.split(r"[\n;]", text[len("perms:"):]) if ln.strip()]
        if not lines:
            raise GroupSpecError("perms: spec lists no permutations")
        cycle_lists = [parse_cycles(ln) for ln in lines]
        m = max([max(c) + 1 for cl in cycle_lists for c in cl] + [1])
        gens = [Permutation.from_cycles(cl, m) for cl in cycle_lists]
        return FiniteGroup(gens, order_cap=order_cap, name="perms")
    raise GroupSpecError(f"group spec must start with 'builtin:' or 'perms:', got {text!r}")

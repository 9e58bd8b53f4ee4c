"""Words in a free group of explicit rank, a small text syntax, and shape detection.

Syntax::

    x3            generator 3 (1-based)
    w^-2          power (any signed integer)
    u v           juxtaposition is the product
    [a,b,c]       generalized commutator a b c a^-1 b^-1 c^-1
    (w)           grouping
    1             the empty word

The rank is always supplied by the caller; ``x1`` in rank 1 and ``x1`` in
rank 2 are different words as far as counting goes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import RankMismatch, UnknownGenerator, WordSyntaxError
from .groups import FiniteGroup

Letter = tuple[int, int]  # (generator index from 1, nonzero exponent)


def free_reduce(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for gen, exp in letters:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            total = stack[-1][1] + exp
            stack.pop()
            if total:
                stack.append((gen, total))
        else:
            stack.append((gen, exp))
    return tuple(stack)


def _inverse(letters: Sequence[Letter]) -> list[Letter]:
    return [(g, -e) for g, e in reversed(letters)]


@dataclass(frozen=True)
class Word:
    rank: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for gen, _ in self.letters:
            if not 1 <= gen <= self.rank:
                raise RankMismatch(f"generator x{gen} outside rank {self.rank}")
        object.__setattr__(self, "letters", free_reduce(self.letters))

    def __mul__(self, other: "Word") -> "Word":
        if other.rank != self.rank:
            raise RankMismatch("cannot multiply words of different rank")
        return Word(self.rank, self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.rank, tuple(_inverse(self.letters)))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def generators_used(self) -> set[int]:
        return {g for g, _ in self.letters}

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in self.letters)


class _Parser:
    def __init__(self, text: str, rank: int):
        self.text = text
        self.pos = 0
        self.rank = rank

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise WordSyntaxError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def integer(self, signed: bool) -> int:
        self.skip()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits_at = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_at:
            raise WordSyntaxError("expected an integer", start)
        return int(self.text[start:self.pos])

    def product(self) -> list[Letter]:
        out: list[Letter] = []
        while self.peek() and self.peek() not in ",])":
            out.extend(self.term())
        return out

    def term(self) -> list[Letter]:
        base = self.primary()
        if self.peek() == "^":
            self.pos += 1
            n = self.integer(signed=True)
            base = (base if n >= 0 else _inverse(base)) * abs(n)
        return base

    def primary(self) -> list[Letter]:
        ch = self.peek()
        start = self.pos
        if ch == "x":
            self.pos += 1
            if not (self.pos < len(self.text) and self.text[self.pos].isdigit()):
                raise UnknownGenerator(f"generator name must be x<digits> at position {start}")
            gen = self.integer(signed=False)
            if gen < 1:
                raise UnknownGenerator(f"generator x{gen} at position {start}; generators start at x1")
            if gen > self.rank:
                raise RankMismatch(f"x{gen} at position {start} exceeds rank {self.rank}")
            return [(gen, 1)]
        if ch == "1":
            self.pos += 1
            return []
        if ch == "(":
            self.pos += 1
            inner = self.product()
            self.expect(")")
            return inner
        if ch == "[":
            self.pos += 1
            parts = [self.product()]
            while self.peek() == ",":
                self.pos += 1
                parts.append(self.product())
            self.expect("]")
            if len(parts) < 2:
                raise WordSyntaxError("a commutator needs at least two entries", start)
            out = [letter for part in parts for letter in part]
            for part in parts:
                out.extend(_inverse(part))
            return out
        if not ch:
            raise WordSyntaxError("unexpected end of input", self.pos)
        if ch.isalpha():
            raise UnknownGenerator(f"unknown generator starting with {ch!r} at position {self.pos}")
        raise WordSyntaxError(f"unexpected character {ch!r}", self.pos)


def parse_word(text: str, rank: int) -> Word:
    if rank < 0:
        raise RankMismatch("rank must be nonnegative")
    parser = _Parser(text, rank)
    letters = parser.product()
    if parser.peek():
        raise WordSyntaxError(f"unexpected {parser.peek()!r}", parser.pos)
    return Word(rank, tuple(letters))


def evaluate(w: Word, assignment: Sequence[int], G: FiniteGroup) -> int:
    """Image of ``w`` under ``x_i -> assignment[i-1]``, as an element index."""
    if len(assignment) != w.rank:
        raise RankMismatch(f"assignment of length {len(assignment)} for rank {w.rank}")
    result = G.identity
    for gen, exp in w.letters:
        result = G.mul(result, G.power(assignment[gen - 1], exp))
    return result


# shapes

Block = tuple[str, int]  # ("power", n) or ("commutator", m)


@dataclass(frozen=True)
class ProductOfSquares:
    k: int
    unused: int = 0

    @property
    def blocks(self) -> tuple[Block, ...]:
        return (("power", 2),) * self.k


@dataclass(frozen=True)
class ProductOfCommutators:
    g: int
    unused: int = 0

    @property
    def blocks(self) -> tuple[Block, ...]:
        return (("commutator", 2),) * self.g


@dataclass(frozen=True)
class GeneralizedCommutatorProduct:
    ms: tuple[int, ...]
    unused: int = 0

    @property
    def blocks(self) -> tuple[Block, ...]:
        return tuple(("commutator", m) for m in self.ms)


@dataclass(frozen=True)
class PowerProduct:
    ns: tuple[int, ...]
    unused: int = 0

    @property
    def blocks(self) -> tuple[Block, ...]:
        return tuple(("power", n) for n in self.ns)


@dataclass(frozen=True)
class MixedProduct:
    """Powers and generalized commutators on pairwise disjoint letters."""
    blocks: tuple[Block, ...]
    unused: int = 0


@dataclass(frozen=True)
class Generic:
    pass


WordShape = Union[ProductOfSquares, ProductOfCommutators, GeneralizedCommutatorProduct,
                  PowerProduct, MixedProduct, Generic]


def _split_blocks(letters: tuple[Letter, ...]) -> list[Block] | None:
    blocks: list[Block] = []
    seen: set[int] = set()
    i, n = 0, len(letters)
    while i < n:
        run = 0
        while i + run < n and letters[i + run][1] == 1:
            run += 1
        if run >= 2 and i + 2 * run <= n and all(
                letters[i + run + t] == (letters[i + t][0], -1) for t in range(run)):
            gens = [letters[i + t][0] for t in range(run)]
            if len(set(gens)) != run or seen.intersection(gens):
                return None
            seen.update(gens)
            blocks.append(("commutator", run))
            i += 2 * run
            continue
        gen, exp = letters[i]
        if gen in seen:
            return None
        seen.add(gen)
        blocks.append(("power", exp))
        i += 1
    return blocks


def recognize_shape(w: Word) -> WordShape:
    blocks = _split_blocks(w.letters)
    if blocks is None:
        return Generic()
    unused = w.rank - len(w.generators_used())
    if not blocks:
        return ProductOfCommutators(0, unused)
    kinds = {kind for kind, _ in blocks}
    if blocks and all(b == ("power", 2) for b in blocks):
        return ProductOfSquares(len(blocks), unused)
    if all(b == ("commutator", 2) for b in blocks):
        return ProductOfCommutators(len(blocks), unused)
    if kinds == {"commutator"}:
        return GeneralizedCommutatorProduct(tuple(m for _, m in blocks), unused)
    if kinds == {"power"}:
        return PowerProduct(tuple(n for _, n in blocks), unused)
    return MixedProduct(tuple(blocks), unused)


def squares_word(k: int) -> Word:
    return Word(k, tuple((i, 2) for i in range(1, k + 1)))


def commutators_word(g: int) -> Word:
    letters = []
    for i in range(g):
        a, b = 2 * i + 1, 2 * i + 2
        letters += [(a, 1), (b, 1), (a, -1), (b, -1)]
    return Word(2 * g, tuple(letters))

"""Exact arithmetic in the cyclotomic field Q(zeta_e).

A value is kept as integer coefficients over ``zeta_e**0 .. zeta_e**(e-1)``
with one positive common denominator.  The canonical form is the remainder
modulo the e-th cyclotomic polynomial, so only the first ``phi(e)`` slots can
be nonzero and equality is coefficient-wise.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Union


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x**n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_divide(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_divide(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]  # den is monic
        if c:
            q[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    assert not any(num), "non-exact cyclotomic division"
    return q


def _reduce(vec: list[int], e: int) -> list[int]:
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    for i in range(e - 1, deg - 1, -1):
        c = vec[i]
        if c:
            base = i - deg
            for j, pj in enumerate(phi):
                if pj:
                    vec[base + j] -= c * pj
    return vec


Number = Union[int, Fraction, "Cyclotomic"]


class Cyclotomic:
    """Element of Q(zeta_e)."""

    __slots__ = ("e", "coeffs", "den")

    def __init__(self, e: int, coeffs: Iterable, den: int = 1, *, _canonical: bool = False):
        if _canonical:
            self.e, self.coeffs, self.den = e, coeffs, den
            return
        vals = list(coeffs)
        if len(vals) > e:
            folded = [Fraction(0)] * e
            for j, c in enumerate(vals):
                folded[j % e] += Fraction(c)
            vals = folded
        vals = [Fraction(c) for c in vals] + [Fraction(0)] * (e - len(vals))
        common = math.lcm(*(c.denominator for c in vals)) * den
        ints = [int(c * common) for c in vals]
        self.e = e
        self.coeffs, self.den = _normalize(_reduce(ints, e), common)

    # constructors

    @classmethod
    def rational(cls, value: Union[int, Fraction], e: int = 1) -> "Cyclotomic":
        value = Fraction(value)
        coeffs = (value.numerator,) + (0,) * (e - 1)
        return cls(e, coeffs, value.denominator, _canonical=True)

    @classmethod
    def zeta(cls, e: int, power: int = 1) -> "Cyclotomic":
        vec = [0] * e
        vec[power % e] = 1
        return cls._from_ints(e, vec, 1)

    @classmethod
    def _from_ints(cls, e: int, vec: list[int], den: int) -> "Cyclotomic":
        coeffs, den = _normalize(_reduce(vec, e), den)
        return cls(e, coeffs, den, _canonical=True)

    # coercion

    def _lift(self, e: int) -> "Cyclotomic":
        if e == self.e:
            return self
        step = e // self.e
        vec = [0] * e
        for j, c in enumerate(self.coeffs):
            if c:
                vec[j * step] = c
        return Cyclotomic._from_ints(e, vec, self.den)

    def _coerce(self, other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Rational)):
            return Cyclotomic.rational(Fraction(other), self.e)
        return None

    def _common(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if other.e == self.e:
            return self, other
        e = math.lcm(self.e, other.e)
        return self._lift(e), other._lift(e)

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        den = math.lcm(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        vec = [x * fa + y * fb for x, y in zip(a.coeffs, b.coeffs)]
        coeffs, den = _normalize(vec, den)
        return Cyclotomic(a.e, coeffs, den, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.e, tuple(-c for c in self.coeffs), self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Cyclotomic):
            other = Fraction(other)
            coeffs, den = _normalize([c * other.numerator for c in self.coeffs], self.den * other.denominator)
            return Cyclotomic(self.e, coeffs, den, _canonical=True)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        e = a.e
        terms_b = [(j, c) for j, c in enumerate(b.coeffs) if c]
        vec = [0] * e
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in terms_b:
                    vec[(i + j) % e] += x * y
        return Cyclotomic._from_ints(e, vec, a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Cyclotomic):
            other = Fraction(other)
            return self * (1 / other)
        if isinstance(other, Cyclotomic) and other.is_rational():
            return self * (1 / other.to_fraction())
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_rational():
                return NotImplemented
            return Cyclotomic.rational(self.to_fraction() ** n, self.e)
        result = Cyclotomic.rational(1, self.e)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugate: ``zeta**j -> zeta**(-j)``."""
        e = self.e
        vec = [0] * e
        for j, c in enumerate(self.coeffs):
            if c:
                vec[(-j) % e] += c
        return Cyclotomic._from_ints(e, vec, self.den)

    # inspection

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_rational_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0] % self.den == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coeffs[0], self.den)

    def __int__(self) -> int:
        if not self.is_rational_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0] // self.den

    def fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.coeffs)

    def sort_key(self) -> tuple[Fraction, ...]:
        return self.fractions()

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.e)
        return sum(c * z ** j for j, c in enumerate(self.coeffs)) / self.den

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return a.den == b.den and a.coeffs == b.coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self.coeffs[0], self.den))
        # consistent with __eq__ only between values of the same field
        return hash((self.e, self.coeffs, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            q = Fraction(c, self.den)
            if j == 0:
                terms.append(_fmt_coeff(q, ""))
            else:
                z = f"z{self.e}" if j == 1 else f"z{self.e}^{j}"
                terms.append(_fmt_coeff(q, z))
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def _fmt_coeff(q: Fraction, z: str) -> str:
    if not z:
        return str(q)
    if q == 1:
        return z
    if q == -1:
        return "-" + z
    return f"{q}*{z}"


def _normalize(vec: list[int], den: int) -> tuple[tuple[int, ...], int]:
    g = math.gcd(den, *vec)
    if g > 1:
        vec = [c // g for c in vec]
        den //= g
    return tuple(vec), den


def as_cyclotomic(x: Number, e: int) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x._lift(e) if x.e != e and e % x.e == 0 else x
    return Cyclotomic.rational(x, e)

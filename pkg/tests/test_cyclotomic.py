import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from surfhom.cyclotomic import Cyclotomic, cyclotomic_polynomial


@pytest.mark.parametrize("n, coeffs", [(1, (-1, 1)), (2, (1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)),
                                       (12, (1, 0, -1, 0, 1))])
def test_cyclotomic_polynomials(n, coeffs):
    assert cyclotomic_polynomial(n) == coeffs


def test_sum_of_roots_of_unity_vanishes():
    for e in (3, 4, 6, 7, 12):
        total = sum((Cyclotomic.zeta(e, j) for j in range(e)), Cyclotomic.rational(0, e))
        assert total.is_zero()


def test_zeta_power_wraps():
    z = Cyclotomic.zeta(6)
    assert z ** 6 == 1
    assert z ** 3 == -1
    assert z ** 2 == z - 1


def test_conjugation_and_norm():
    z = Cyclotomic.zeta(7, 3)
    assert z * z.conjugate() == 1
    assert (z + z.conjugate()).conjugate() == z + z.conjugate()


def test_mixed_fields_lift():
    w = Cyclotomic.zeta(3)
    i = Cyclotomic.zeta(4)
    prod = w * i
    assert prod.e == 12
    assert prod == Cyclotomic.zeta(12, 7)


def test_rational_arithmetic():
    x = Cyclotomic.rational(Fraction(3, 4), 5) + Fraction(1, 4)
    assert x.is_rational_integer() and int(x) == 1
    assert (Cyclotomic.zeta(5) / 2) * 2 == Cyclotomic.zeta(5)
    assert str(Cyclotomic.zeta(6) - 1) == "-1 + z6"


@given(st.lists(st.integers(-5, 5), min_size=6, max_size=6), st.lists(st.integers(-5, 5), min_size=6, max_size=6))
def test_matches_complex_arithmetic(a, b):
    x, y = Cyclotomic(6, a), Cyclotomic(6, b)
    zeta = cmath.exp(2j * cmath.pi / 6)
    cx = sum(c * zeta ** k for k, c in enumerate(a))
    cy = sum(c * zeta ** k for k, c in enumerate(b))
    assert abs(complex(x * y) - cx * cy) < 1e-9
    assert abs(complex(x + y) - (cx + cy)) < 1e-9
    assert (x * y == y * x) and hash(x * y) == hash(y * x)

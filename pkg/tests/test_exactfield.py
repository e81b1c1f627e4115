from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polysubspace import (QQ, QQ_I, FieldElement, IncompatibleTower, Tower, field_add,
                          field_inv, field_mul, field_neg, format_scalar, parse_scalar,
                          tower_join)
from polysubspace.exactfield import reduce_scalar, scalar_sort_key

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
elements = st.builds(lambda a, b, c, e: FieldElement(a, b, c, e, d=3), fracs, fracs, fracs, fracs)


def test_gaussian_norm():
    one_i = FieldElement(1, 1)
    assert field_mul(one_i, FieldElement(1, -1)) == 2


def test_inverse_of_i_sqrt3():
    x = FieldElement(0, 0, 0, 1, d=3)
    inv = field_inv(x)
    assert inv == FieldElement(0, 0, 0, Fraction(-1, 3), d=3)
    assert field_mul(x, inv) == 1


def test_rational_sum():
    assert field_add(Fraction(2, 3), Fraction(1, 6)) == Fraction(5, 6)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        field_inv(FieldElement(0))


def test_tower_join():
    assert tower_join(Fraction(1), FieldElement.i()) == QQ_I
    assert tower_join(FieldElement.i(), FieldElement.sqrt(3)) == Tower(2, 3)
    with pytest.raises(IncompatibleTower):
        tower_join(FieldElement.sqrt(2), FieldElement.sqrt(3))
    assert QQ.join(QQ_I) == QQ_I


def test_radicand_must_be_squarefree():
    with pytest.raises(ValueError):
        FieldElement.sqrt(4)
    with pytest.raises(ValueError):
        FieldElement.sqrt(1)


def test_rational_values_demote():
    assert isinstance(reduce_scalar(FieldElement(3, 0)), Fraction)
    assert field_mul(FieldElement.i(), FieldElement.i()) == -1


@settings(max_examples=150, deadline=None)
@given(elements, elements, elements)
def test_field_axioms(x, y, w):
    assert (x + y) + w == x + (y + w)
    assert (x * y) * w == x * (y * w)
    assert x * (y + w) == x * y + x * w
    assert x * y == y * x
    assert field_add(x, field_neg(x)) == 0
    if x:
        assert field_mul(x, field_inv(x)) == 1


@settings(max_examples=150, deadline=None)
@given(elements, elements)
def test_difference_zero_iff_equal(x, y):
    assert ((x - y) == 0) == (x.coords == y.coords)


@settings(max_examples=150, deadline=None)
@given(elements)
def test_text_round_trip(x):
    assert parse_scalar(format_scalar(x), d=3) == x


@pytest.mark.parametrize("text", ["-1/3*i*sqrt(3)", "2 + i", "sqrt(3)", "-i", "5/7"])
def test_parse_known_forms(text):
    x = parse_scalar(text, d=3)
    assert parse_scalar(format_scalar(x), d=3) == x


def test_sort_order_simple_first():
    xs = [FieldElement.i(), Fraction(-1), Fraction(2), Fraction(0), Fraction(1), FieldElement(0, -1)]
    got = sorted(xs, key=scalar_sort_key)
    assert got == [0, 1, -1, 2, FieldElement.i(), FieldElement(0, -1)]

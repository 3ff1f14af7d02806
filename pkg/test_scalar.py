from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kannan.models.scalar import Ordering, approx, compare, format_scalar, lt_sqrt, parse_scalar

F = Fraction


@pytest.mark.parametrize("a, b, expected", [
    (F(1, 3), F(1, 3), Ordering.EQUAL),
    (F(7, 6), F(3, 2), Ordering.LESS),
    (F(159, 260), F(32, 260), Ordering.GREATER),
    (F(-1, 2), F(0), Ordering.LESS),
])
def test_compare(a, b, expected):
    assert compare(a, b) is expected


@pytest.mark.parametrize("a, u, expected", [
    (F(0), F(1, 4), True),
    (F(1, 2), F(1, 4), False),
    (F(1, 3), F(1, 4), True),
    (F(-5), F(0), True),
    (F(0), F(0), False),
])
def test_lt_sqrt(a, u, expected):
    assert lt_sqrt(a, u) is expected


def test_lt_sqrt_is_strict_at_the_boundary():
    assert not lt_sqrt(F(1, 2), F(1, 4))


def test_lt_sqrt_rejects_negative_radicand():
    with pytest.raises(ValueError):
        lt_sqrt(F(1), F(-1))


@given(st.integers(min_value=-10 ** 6, max_value=10 ** 12), st.integers(min_value=0, max_value=10 ** 24))
def test_lt_sqrt_matches_integer_square_root(a, u):
    root = isqrt(u)
    expected = a < root or (a == root and root * root < u)
    assert lt_sqrt(F(a), F(u)) is expected


@given(st.fractions(min_value=0, max_denominator=10 ** 6), st.fractions(min_value=0, max_denominator=10 ** 6),
       st.integers(min_value=1, max_value=10 ** 6))
def test_lt_sqrt_is_scale_invariant(a, u, c):
    assert lt_sqrt(a, u) is lt_sqrt(a * c, u * c * c)


@pytest.mark.parametrize("text, expected", [
    ("3/4", F(3, 4)),
    ("-2", F(-2)),
    ("0.25", F(1, 4)),
    ("6/4", F(3, 2)),
    (" 1/2 ", F(1, 2)),
    (7, F(7)),
])
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["1/0", "abc", "1/-2", "1e3", "", True, 0.5])
def test_parse_scalar_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_format_scalar():
    assert format_scalar(F(6, 4)) == "3/2"
    assert format_scalar(F(4)) == "4"
    assert format_scalar(F(-1, 3)) == "-1/3"


@given(st.fractions())
def test_text_form_reads_back_exactly(s):
    text = format_scalar(s)
    assert parse_scalar(text) == s
    assert format_scalar(parse_scalar(text)) == text


def test_approx_is_marked():
    assert approx(F(159, 260)) == "≈0.611538"

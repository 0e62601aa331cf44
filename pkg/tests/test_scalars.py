import pytest
from hypothesis import given, settings, strategies as st

from ternalg.scalars import (
    ONE,
    ZERO,
    QuadScalar,
    RadicandMismatch,
    ScalarParseError,
    format_scalar,
    parse_scalar,
)


def test_rational_canonical_form():
    x = QuadScalar(3, 0, 5)
    assert x.d == 1
    assert x == QuadScalar(3)


def test_radicand_one_folds():
    # sqrt(1) = 1, so 2 + 3*sqrt(1) is just 5
    assert QuadScalar(2, 3, 1) == QuadScalar(5)


def test_add_sub():
    a = QuadScalar(1, 2, 5)
    b = QuadScalar(3, -2, 5)
    assert a + b == QuadScalar(4)
    assert a - b == QuadScalar(-2, 4, 5)


def test_mul_oracle():
    # (1 + sqrt5)(-1 + sqrt5) = 5 - 1 = 4
    a = QuadScalar(1, 1, 5)
    b = QuadScalar(-1, 1, 5)
    assert a * b == QuadScalar(4)


def test_inverse_oracle():
    # 1/(1 + sqrt5) = (sqrt5 - 1)/4
    a = QuadScalar(1, 1, 5)
    inv = a.inverse()
    assert inv == QuadScalar("-1/4", "1/4", 5)
    assert a * inv == ONE


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_rational_promotes_to_radicand():
    a = QuadScalar(2)
    b = QuadScalar(0, 1, 5)
    assert a * b == QuadScalar(0, 2, 5)
    assert a + b == QuadScalar(2, 1, 5)


def test_distinct_radicands_rejected():
    with pytest.raises(RadicandMismatch):
        QuadScalar(0, 1, 2) + QuadScalar(0, 1, 3)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("2", QuadScalar(2)),
        ("-3/5", QuadScalar("-3/5")),
        ("1/5*sqrt(5)", QuadScalar(0, "1/5", 5)),
        ("sqrt(5)", QuadScalar(0, 1, 5)),
        ("1+2*sqrt(5)", QuadScalar(1, 2, 5)),
        ("1-2*sqrt(5)", QuadScalar(1, -2, 5)),
        ("-1*sqrt(5)", QuadScalar(0, -1, 5)),
        ("3+sqrt(2)", QuadScalar(3, 1, 2)),
        ("0", ZERO),
        ("1+2", QuadScalar(3)),
        ("2*sqrt(2)+3", QuadScalar(3, 2, 2)),
    ],
)
def test_parse(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize(
    "text",
    ["", "sqrt(5", "-sqrt(5)", "1+1*sqrt(2)+1*sqrt(2)", "1*sqrt(2)+1*sqrt(3)", "x"],
)
def test_parse_rejects(text):
    with pytest.raises(ScalarParseError):
        parse_scalar(text)


def test_parse_radicand_context():
    with pytest.raises(ScalarParseError):
        parse_scalar("sqrt(3)", radicand=5)
    assert parse_scalar("sqrt(5)", radicand=5) == QuadScalar(0, 1, 5)


def test_format_round_trip_cases():
    cases = [
        QuadScalar(0),
        QuadScalar("7/3"),
        QuadScalar(-2, 1, 5),
        QuadScalar(0, "-1/2", 3),
        QuadScalar("1/2", "3/4", 2),
    ]
    for x in cases:
        assert parse_scalar(format_scalar(x)) == x


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=9)
radicands = st.sampled_from([2, 3, 5])


@st.composite
def scalars(draw):
    return QuadScalar(draw(rationals), draw(rationals), draw(radicands))


@settings(max_examples=200, deadline=None)
@given(scalars(), scalars())
def test_field_axioms_pairwise(a, b):
    if a.d != b.d and a.d != 1 and b.d != 1:
        return
    assert a + b == b + a
    assert a * b == b * a
    assert a - b == -(b - a)
    if a:
        assert a * a.inverse() == ONE


@settings(max_examples=200, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms_triple(a, b, c):
    ds = {x.d for x in (a, b, c) if x.d != 1}
    if len(ds) > 1:
        return
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100, deadline=None)
@given(scalars())
def test_format_parse_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a

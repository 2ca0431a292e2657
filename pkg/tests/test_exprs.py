import pytest

from equifgl.poly import GradedPoly
from equifgl.exprs import parse_expr, ParseError


def test_names_with_and_without_underscores():
    assert parse_expr("q2") == parse_expr("q_2")
    assert parse_expr("d_1_0") == GradedPoly.gen("D", 1, 0)
    assert parse_expr("bp2") == GradedPoly.gen("bp", 2)
    assert parse_expr("u") == GradedPoly.gen("u")


def test_arithmetic():
    q2 = GradedPoly.gen("q", 2)
    b1 = GradedPoly.gen("b", 1)
    assert parse_expr("-q2") == -q2
    assert parse_expr("2*b1 + q2") == 2 * b1 + q2
    assert parse_expr("(b1 + 1)^2") == (b1 + GradedPoly.const(1)) ** 2
    assert parse_expr("b1^3 - b1*b1*b1").is_zero()


def test_integer_literals():
    assert parse_expr("7") == GradedPoly.const(7)
    assert parse_expr("3 - 5") == GradedPoly.const(-2)


def test_parse_errors():
    for bad in ("", "q2 +", "2 ** 3", "frob_1", "(q2", "q2)"):
        with pytest.raises(ParseError):
            parse_expr(bad)

import pytest

from equifgl.poly import GradedPoly
from equifgl.series import TruncSeries, NotInvertible


def _geom(cutoff):
    # 1 + b1 x + b1^2 x^2 + ...
    coeffs = {(k,): GradedPoly.gen("b", 1, power=k) if k else
              GradedPoly.const(1) for k in range(cutoff)}
    return TruncSeries(("x",), cutoff, coeffs)


def test_invert_roundtrip():
    s = _geom(6)
    inv = s.invert()
    one = TruncSeries.const(("x",), 6, GradedPoly.const(1))
    assert s * inv == one


def test_invert_requires_unit():
    x = TruncSeries.var(("x",), 5, "x")
    with pytest.raises(NotInvertible):
        x.invert()


def test_geometric_inverse_value():
    s = _geom(5)
    inv = s.invert()
    assert inv.coefficient(1) == -GradedPoly.gen("b", 1)
    assert inv.coefficient(2).is_zero()


def test_revert():
    # B(x) = x + b1 x^2; reversion composes to the identity
    cutoff = 6
    b = TruncSeries.var(("x",), cutoff, "x") + TruncSeries(
        ("x",), cutoff, {(2,): GradedPoly.gen("b", 1)})
    rev = b.revert()
    assert b.compose(rev) == TruncSeries.var(("x",), cutoff, "x")
    assert rev.compose(b) == TruncSeries.var(("x",), cutoff, "x")


def test_multivariable_substitute():
    cutoff = 5
    x = TruncSeries.var(("x",), cutoff, "x")
    s = x * x + x
    y = TruncSeries.var(("y", "z"), cutoff, "y")
    z = TruncSeries.var(("y", "z"), cutoff, "z")
    t = s.substitute({"x": y + z})
    assert t.coefficient(1, 1) == GradedPoly.const(2)
    assert t.coefficient(1, 0) == GradedPoly.const(1)


def test_power():
    s = _geom(5)
    assert s ** 3 == s * s * s
    assert (s ** 0) == TruncSeries.const(("x",), 5, GradedPoly.const(1))

import pytest
from hypothesis import given, strategies as st

from equifgl.poly import GradedPoly, gen, SymbolicError

_U = gen("u")


def _rand_poly(draw_terms):
    out = GradedPoly.zero()
    for coef, bexp, uexp in draw_terms:
        mono = GradedPoly.const(coef)
        if bexp:
            mono = mono * GradedPoly.gen("b", 1, power=bexp)
        if uexp:
            mono = mono * GradedPoly.gen("u", power=uexp)
        out = out + mono
    return out


terms = st.lists(st.tuples(st.integers(-5, 5), st.integers(0, 3),
                           st.integers(-2, 2)), min_size=0, max_size=4)


@given(terms, terms, terms)
def test_ring_axioms(a, b, c):
    p, q, r = _rand_poly(a), _rand_poly(b), _rand_poly(c)
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == GradedPoly.zero()


def test_generators_and_render():
    p = GradedPoly.gen("D", 1, 0) - 2 * GradedPoly.gen("b", 1)
    assert "d_1_0" in p.render()
    assert gen("D", 1, 0) in dict(next(iter((p - p + p).terms)))


def test_laurent_only_u():
    GradedPoly.gen("u", power=-2)
    with pytest.raises(SymbolicError):
        GradedPoly.gen("b", 1, power=-1)


def test_coefficient_of_and_split():
    p = GradedPoly.gen("u", power=2) * GradedPoly.gen("b", 1) \
        + 3 * GradedPoly.gen("u", power=-1)
    assert p.coefficient_of(_U, 2) == GradedPoly.gen("b", 1)
    assert p.coefficient_of(_U, -1) == GradedPoly.const(3)
    assert p.exponent_range(_U) == (-1, 2)
    parts = p.split_by(_U)
    assert set(parts) == {-1, 2}


def test_substitute():
    p = GradedPoly.gen("b", 1, power=2) + GradedPoly.gen("b", 2)
    q = p.substitute({gen("b", 1): -GradedPoly.gen("b", 1)})
    assert q == p  # even power is sign-invariant
    r = (GradedPoly.gen("b", 1)).substitute(
        {gen("b", 1): GradedPoly.gen("b", 2) + GradedPoly.const(1)})
    assert r == GradedPoly.gen("b", 2) + GradedPoly.const(1)


def test_exact_division():
    p = 2 * GradedPoly.gen("b", 1) + 4 * GradedPoly.gen("b", 2)
    assert p.content_divisible_by(2)
    assert p.exact_div(2) == GradedPoly.gen("b", 1) + 2 * GradedPoly.gen("b", 2)
    assert not (p + GradedPoly.const(1)).content_divisible_by(2)


def test_degree():
    p = GradedPoly.gen("b", 1, power=2)
    assert p.degree() == (4, 0)
    q = GradedPoly.gen("u")
    assert q.degree() == (-2, 0)
    with pytest.raises(SymbolicError):
        (p + q).degree()

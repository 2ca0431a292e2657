from equifgl.poly import GradedPoly
from equifgl.fgl import get_service, build_fgl, two_series

srv = get_service()
b1 = GradedPoly.gen("b", 1)
b2 = GradedPoly.gen("b", 2)
b3 = GradedPoly.gen("b", 3)
u_inv = GradedPoly.gen("u", power=-1)


def test_doubling_low_terms():
    p = two_series(4)
    assert p[0].is_zero()
    assert p[1] == GradedPoly.const(2)
    assert p[2] == 2 * b1


def test_log_coefficients():
    assert srv.m(0) == GradedPoly.const(1)
    assert srv.m(1) == -b1
    assert srv.m(2) == 2 * b1 ** 2 - b2


def test_a_table():
    assert srv.a(1, 0) == GradedPoly.const(1)
    assert srv.a(1, 1) == 2 * b1
    assert srv.a(1, 2) == -2 * b1 ** 2 + 3 * b2


def test_c_low_terms():
    assert srv.c(1, -2) == GradedPoly.const(-1)
    assert srv.c(1, -1) == -2 * b1
    assert srv.c(1, 0) == 2 * b1 ** 2 - 3 * b2


def test_c_vanishing():
    for i in range(5):
        for j in range(-i - 6, -i - 1):
            assert srv.c(i, j).is_zero()


def test_d_small():
    assert srv.d_small(0) == u_inv
    assert srv.d_small(1) == -u_inv * GradedPoly.gen("bp", 1)
    assert srv.d_small(2) == u_inv * (GradedPoly.gen("bp", 1) ** 2
                                      - GradedPoly.gen("bp", 2))


def test_mischenko():
    assert srv.mischenko(1) == GradedPoly.const(1)
    assert srv.mischenko(2) == -2 * b1
    assert srv.mischenko(3) == 6 * b1 ** 2 - 3 * b2


def test_fgl_symmetry():
    model = build_fgl(5)
    for i in range(5):
        for j in range(5):
            if i + j < 5:
                assert model.coefficient(i, j) == model.coefficient(j, i)


def test_fgl_unit_row():
    model = build_fgl(5)
    assert model.coefficient(1, 0) == GradedPoly.const(1)
    assert model.coefficient(0, 0).is_zero()
    for i in range(2, 5):
        assert model.coefficient(i, 0).is_zero()

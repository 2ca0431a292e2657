import pytest

from equifgl.poly import GradedPoly
from equifgl.efgl import (Flag, DModel, pi_symbol, beta_coproduct,
                          interval_coproduct, counit, pair_vector,
                          pi_to_beta, unitriangular_inverse, matrix_mul,
                          pairing_relation_check, coproduct_table,
                          cartier_dual, cartier_roundtrip_ok,
                          rees_filtered_data, filtered_check,
                          universality_check, FilteredData, u_level,
                          TruncationLoss)


def _flag():
    return Flag(("1", "s", "1", "s"), "alternating")


def _model(trunc=4):
    return DModel(_flag(), truncation=trunc)


def test_flag_rho_and_tail():
    fl = _flag()
    assert [fl.rho(i) for i in range(1, 7)] == ["1", "s", "1", "s", "1", "s"]
    fl2 = Flag(("s",), "all-ones-then")
    assert [fl2.rho(i) for i in range(1, 5)] == ["s", "1", "s", "1"]


def test_flag_ell():
    fl = _flag()
    # ell_i = sigmas among rho_1..rho_{i-1}, minus 1 when rho_i = sigma
    assert fl.ell(1) == 0
    assert fl.ell(2) == -1
    assert fl.ell(3) == 1
    assert fl.ell(4) == 0


def test_pi_symbol_edge_cases():
    assert pi_symbol((0, 0)).is_zero()
    assert pi_symbol((1, 0)) == GradedPoly.const(1)
    assert pi_symbol((0, 1)) == GradedPoly.const(1)
    assert not pi_symbol((1, 1)).is_zero()


def test_beta_coproduct_terms():
    model = _model()
    for n in range(1, 5):
        terms = beta_coproduct(model, n)
        assert len(terms) == n
        assert all(left == (1, j) and right == (j, n)
                   for j, (left, right) in terms)


def test_counit_picks_length_one():
    one = GradedPoly.const(1)
    assert counit({(1, 1): one, (1, 3): one}) == one
    assert counit({(1, 3): one}).is_zero()


def test_coassociativity_of_interval_splitting():
    for a in range(1, 4):
        for b in range(a, 5):
            # (Delta x id) Delta == (id x Delta) Delta as multisets of triples
            lhs = sorted((x, y, z)
                         for (x, (j, _)) in interval_coproduct(a, b)
                         for (y, z) in interval_coproduct(j, b))
            rhs = sorted((x, y, z)
                         for ((_, j), z) in interval_coproduct(a, b)
                         for (x, y) in interval_coproduct(a, j))
            assert lhs == rhs


def test_pairing_is_kronecker():
    model = _model()
    for n in range(1, 5):
        d = {(1, n): GradedPoly.const(1)}
        for j in range(1, n + 1):
            expect = GradedPoly.const(1) if j == n else GradedPoly.zero()
            assert pair_vector(model, dict(d), j) == expect, (n, j)


def test_pi_to_beta_triangular_and_inverse():
    model = _model(4)
    mat = pi_to_beta(model, 4)
    for r in range(4):
        assert mat[r][r] == GradedPoly.const(1)
        for c in range(r + 1, 4):
            assert mat[r][c].is_zero()
    inv = unitriangular_inverse(mat)
    prod = matrix_mul(mat, inv)
    for r in range(4):
        for c in range(4):
            want = GradedPoly.const(1) if r == c else GradedPoly.zero()
            assert prod[r][c] == want


def test_pairing_relation_all_j():
    model = _model()
    for n in range(1, 4):
        for j in range(1, n + 2):
            assert pairing_relation_check(model, n, j), (n, j)


def test_cartier_double_dual_identity():
    model = _model()
    assert cartier_roundtrip_ok(model)
    dual = cartier_dual(model)
    assert dual["truncation"] == 4
    # dual multiplication concatenates intervals
    assert dual["mult"][((1, 2), (2, 4))] == (1, 4)


def test_truncation_loss_raised():
    model = _model(2)
    with pytest.raises(TruncationLoss):
        beta_coproduct(model, 3)


def test_filtered_data_checks():
    model = _model()
    data = rees_filtered_data(3)
    ok, violations = filtered_check(data, model)
    assert ok, violations
    assert universality_check(data)


def test_filtered_data_detects_violation():
    model = _model()
    data = rees_filtered_data(3)
    bad = FilteredData(data.a_gens, [GradedPoly.gen("u", power=2)],
                       data.d_coords, data.level_fn)
    ok, violations = filtered_check(bad, model)
    assert not ok
    assert any(v[0] == "axiom1" for v in violations)


def test_filtered_data_axiom3():
    model = _model()
    coords = [(1, {2: GradedPoly.gen("u", power=5)})]  # ell_2 = -1, bound 0
    data = rees_filtered_data(3, coords)
    ok, violations = filtered_check(data, model)
    assert not ok
    assert any(v[0] == "axiom3" for v in violations)


def test_u_level():
    assert u_level(GradedPoly.gen("u", power=3)) == 3
    assert u_level(GradedPoly.const(5)) == 0
    assert u_level(GradedPoly.zero()) == 0

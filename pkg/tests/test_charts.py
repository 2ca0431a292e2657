import random

import pytest

from equifgl.poly import GradedPoly, SymbolicError
from equifgl.charts import (RC2Element, j_power_rank, k_diamond_normalize,
                            is_normal, critical_pair_report, k_diamond_rank,
                            j_filtration_rank, k_stabilize,
                            hr_diamond_normalize, TwoTorsionCoefficientRing,
                            MackeyLabel, k_chart_cell,
                            k_chart, render_chart, group_description,
                            stabilize_ring_map_check)


def g(name, p=1):
    return GradedPoly.gen(name, power=p)


def test_rc2_arithmetic_and_maps():
    x = RC2Element(2, 3)
    y = RC2Element(1, -1)
    assert (x * y) == RC2Element(-1, 1)
    assert x.augmentation() == 5
    assert x.sign_map() == -1


def test_rc2_j_power_membership():
    j = RC2Element(-1, 1)
    assert j.in_j_power(1)
    assert not j.in_j_power(2)
    assert (j * j).in_j_power(2)
    assert RC2Element(3, 0).in_j_power(0)
    assert not RC2Element(3, 0).in_j_power(1)


def test_j_power_rank_constant():
    assert [j_power_rank(n) for n in range(4)] == [2, 1, 1, 1]


def test_normalize_kills_sigma_mu():
    f = g("mu") * (g("sigma") + GradedPoly.const(1))
    assert k_diamond_normalize(f).is_zero()


def test_normalize_sigma_square():
    f = g("sigma", 2)
    assert k_diamond_normalize(f) == GradedPoly.const(1)


def test_normalize_v_mu_square():
    f = g("v") * g("mu", 2)
    want = -2 * (g("tau") * g("mu"))
    assert k_diamond_normalize(f) == want


def test_normal_forms_stable_under_rule_order():
    rng = random.Random(5)
    names = ["sigma", "tau", "mu", "v"]
    for _ in range(40):
        f = GradedPoly.zero()
        for _ in range(rng.randint(1, 4)):
            m = GradedPoly.const(rng.choice([-2, -1, 1, 2]))
            for _ in range(rng.randint(0, 4)):
                m = m * g(rng.choice(names))
            f = f + m
        base = k_diamond_normalize(f)
        assert is_normal(base)
        order = ["sigma-mu", "sigma-tau", "sigma-square", "v-mu-square"]
        rng.shuffle(order)
        assert k_diamond_normalize(f, rule_order=order) == base


def test_critical_pairs_join():
    ok, details = critical_pair_report(exp_bound=3)
    assert ok, details


def test_rank_table_matches_filtration():
    for k in range(-2, 7):
        for n in range(0, 7):
            assert k_diamond_rank(k, n) == j_filtration_rank(k, n), (k, n)


def test_stabilize_kills_relations():
    rels = [
        g("sigma") * g("mu") + g("mu"),
        g("sigma") * g("tau") - g("tau") - g("v") * g("mu"),
        g("sigma", 2) - GradedPoly.const(1),
        g("v") * g("mu", 2) + 2 * (g("tau") * g("mu")),
    ]
    for r in rels:
        assert k_stabilize(r).is_zero(), r.render()


def test_stabilize_multiplicative():
    assert stabilize_ring_map_check(trials=50, seed=3)


def test_hr_normalize():
    f = 2 * g("mu") + 3 * g("tau")
    out = hr_diamond_normalize(f)
    assert out == 3 * g("tau")
    with pytest.raises(TwoTorsionCoefficientRing):
        hr_diamond_normalize(f, "Z/2")


def test_mackey_label_validation():
    with pytest.raises(SymbolicError):
        MackeyLabel("quotient", (3, 2))
    assert MackeyLabel("quotient", (1, 3)).glyph() == "1/3"
    assert MackeyLabel("power", (2,)).glyph() == "2"
    assert MackeyLabel("zero").glyph() == "."


def test_chart_cells_spot_values():
    assert k_chart_cell(0, 0) == MackeyLabel("box")
    assert k_chart_cell(2, -2) == MackeyLabel("box")
    assert k_chart_cell(0, -2) == MackeyLabel("power", (1,))
    assert k_chart_cell(0, -4) == MackeyLabel("power", (2,))
    assert k_chart_cell(-2, 2) == MackeyLabel("circle")
    assert k_chart_cell(-2, 4) == MackeyLabel("circle")
    assert k_chart_cell(-4, 2) == MackeyLabel("zero")
    assert k_chart_cell(1, 0) == MackeyLabel("zero")
    assert k_chart_cell(-5, 6) == MackeyLabel("quotient", (2, 3))


def test_chart_rows_and_render():
    rows = k_chart("-2..2", (-2, 2))
    assert [r["y"] for r in rows] == [2, 1, 0, -1, -2]
    assert all(r["derived"] == (r["y"] % 2 != 0) for r in rows)
    text = render_chart(rows)
    assert "□" in text


def test_group_description():
    assert group_description(0, []) == "0"
    assert group_description(2, []) == "Z^2"
    assert group_description(1, [2]) == "Z + Z/2"

"""End-to-end verification battery.

Each test runs one check from equifgl.acceptance and prints a single
PASS/FAIL line with the check's own summary.
"""

from equifgl import acceptance


def _run(name, fn):
    ok, detail = fn()
    print("%s: %s -- %s" % ("PASS" if ok else "FAIL", name, detail))
    assert ok, "%s: %s" % (name, detail)


def test_group_law_axioms():
    _run("group-law axioms", acceptance.criterion_1)


def test_lagrange_inversion():
    _run("lagrange inversion", acceptance.criterion_2)


def test_d_series():
    _run("d-series", acceptance.criterion_3)


def test_c_support():
    _run("c-support", acceptance.criterion_4)


def test_ideal_relations():
    _run("ideal relations", acceptance.criterion_5)


def test_tate_square():
    _run("tate square", acceptance.criterion_6)


def test_projective_classes():
    _run("projective classes", acceptance.criterion_7)


def test_elimination():
    _run("elimination", acceptance.criterion_8)


def test_rees_embedding():
    _run("rees embedding", acceptance.criterion_9)


def test_associated_graded():
    _run("associated graded", acceptance.criterion_10)


def test_change_of_basis():
    _run("change of basis", acceptance.criterion_11)


def test_coproduct_cartier():
    _run("coproduct/cartier", acceptance.criterion_12)


def test_k_theory_ring():
    _run("k-theory ring", acceptance.criterion_13)


def test_charts():
    _run("charts", acceptance.criterion_14)


def test_lattice_sanity():
    _run("lattice sanity", acceptance.criterion_15)

import json
import os

from equifgl.poly import GradedPoly
from equifgl.fgl import get_service
from equifgl.lattice import build_lattice
from equifgl.projective import (DEFAULT_VARIANT, all_variants, pi_underlying,
                                pi_fixed, pi_verify, pi_lift,
                                candidate_images, convention_audit)

srv = get_service()
GOLDEN = os.path.join(os.path.dirname(__file__), "golden",
                      "convention_audit.json")


def u(k=1):
    return GradedPoly.gen("u", power=k)


def test_variant_count_and_default():
    vs = all_variants()
    assert len(vs) == 16
    assert len({v.label() for v in vs}) == 16
    assert DEFAULT_VARIANT.label() in {v.label() for v in vs}


def test_pi_fixed_small_values():
    assert pi_fixed(1, 0) == GradedPoly.const(1)
    assert pi_fixed(1, 1) == 2 * u(-1)
    b1 = GradedPoly.gen("b", 1)
    bp1 = GradedPoly.gen("bp", 1)
    assert pi_fixed(2, 1) == u(-2) - (2 * b1 + bp1) * u(-1)


def test_pi_underlying_is_stable_class():
    assert pi_underlying(1, 1) == srv.mischenko(2)
    assert pi_underlying(2, 1) == srv.mischenko(3)


def test_verify_default_example():
    cand = -GradedPoly.gen("q", 2)
    ok, report = pi_verify(1, 1, cand)
    assert ok
    assert report["fixed"]["match"] and report["underlying"]["match"]


def test_verify_reports_both_image_pairs_on_failure():
    cand = GradedPoly.gen("q", 2)
    ok, report = pi_verify(1, 1, cand)
    assert not ok
    for side in ("underlying", "fixed"):
        assert "candidate" in report[side] and "expected" in report[side]


def test_candidate_images_consistent_with_verify():
    cand = -GradedPoly.gen("q", 2)
    aug, fixed = candidate_images(cand, DEFAULT_VARIANT)
    assert aug == pi_underlying(1, 1)


def test_lift_produces_verified_candidates():
    lat = build_lattice(14)
    for m, n in ((1, 1), (2, 1), (2, 2)):
        cand = pi_lift(m, n, DEFAULT_VARIANT, lat)
        ok, report = pi_verify(m, n, cand)
        assert ok, (m, n, report)


def test_audit_matches_golden():
    with open(GOLDEN) as fh:
        golden = json.load(fh)
    fresh = json.loads(json.dumps(convention_audit(), sort_keys=True))
    assert fresh == golden


def test_audit_shape():
    audit = convention_audit()
    assert len(audit["examples"]) == 3
    labels = {v.label() for v in all_variants()}
    for ex in audit["examples"]:
        assert set(ex["passing_variants"]) <= labels

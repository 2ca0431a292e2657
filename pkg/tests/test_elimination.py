import random

import pytest

from equifgl.poly import GradedPoly
from equifgl.elimination import (EliminationProblem, eliminate,
                                 brute_force_member, leading_term,
                                 submodule_presentation, ZeroPolynomial,
                                 InvalidWitness)


def x(i):
    return GradedPoly.gen("x", i)


def _problem():
    # u x_1 = x_2^2, u x_2 = x_1 x_2, u x_3 = x_1 + 2 x_2
    return EliminationProblem(3, [
        (1, -(x(2) ** 2)),
        (2, -(x(1) * x(2))),
        (3, -(x(1) + 2 * x(2))),
    ])


def test_leading_term_prefers_u_power():
    f = GradedPoly.gen("u") * x(1) + x(2) ** 3
    coef, mono = leading_term(f, 3)
    assert coef == 1
    assert dict(mono).get(("u",)) == 1 or "u" in str(mono)


def test_leading_term_of_zero_raises():
    with pytest.raises(ZeroPolynomial):
        leading_term(GradedPoly.zero(), 3)


def test_syzygy_certificate_single_step():
    prob = _problem()
    f = prob.syzygy(1, 2)
    witness = [(-x(2), 1), (x(1), 2)]
    cert = eliminate(f, prob, witness)
    assert cert.expand() == f
    assert len(cert.combination) >= 1


def test_eliminate_random_combinations():
    prob = _problem()
    rng = random.Random(11)
    for trial in range(12):
        f = GradedPoly.zero()
        witness = {1: GradedPoly.zero(), 2: GradedPoly.zero(),
                   3: GradedPoly.zero()}
        for _ in range(rng.randint(1, 3)):
            i, j = rng.sample([1, 2, 3], 2)
            c = GradedPoly.const(rng.choice([-2, -1, 1, 2, 3]))
            if rng.random() < 0.5:
                c = c * x(rng.randint(1, 3))
            f = f + c * prob.syzygy(i, j)
            witness[j] = witness[j] + c * x(i)
            witness[i] = witness[i] - c * x(j)
        cert = eliminate(f, prob, [(q, i) for i, q in witness.items()])
        assert cert.expand() == f
        if trial < 4:
            assert brute_force_member(f, prob, 5)


def test_bad_witness_rejected():
    prob = _problem()
    f = prob.syzygy(1, 2)
    with pytest.raises(InvalidWitness):
        eliminate(f, prob, [(x(2), 1)])


def test_u_term_in_target_rejected():
    prob = _problem()
    with pytest.raises(InvalidWitness):
        eliminate(GradedPoly.gen("u"), prob, [])


def test_nonmember_fails_brute_force():
    prob = _problem()
    assert not brute_force_member(x(1), prob, bound=3)


def test_certificate_serialization():
    prob = _problem()
    f = 2 * prob.syzygy(2, 3)
    witness = [(2 * x(2), 3), (-2 * x(3), 2)]
    cert = eliminate(f, prob, witness)
    obj = cert.to_obj()
    assert obj["combination"]
    assert all(len(row["pair"]) == 2 for row in obj["combination"])


def test_submodule_presentation_shape():
    prob = _problem()
    rows = submodule_presentation(prob, 2)
    kinds = {kind for kind, _, _ in rows}
    assert kinds == {"syzygy", "u-relation"}
    assert sum(1 for k, _, _ in rows if k == "syzygy") == 3
    assert sum(1 for k, _, _ in rows if k == "u-relation") == 6

import pytest

from equifgl.poly import GradedPoly, gen
from equifgl.fgl import get_service
from equifgl.lattice import build_lattice
from equifgl.rings import (PresentedElement, RING_STABLE, RING_GEOMETRIC,
                           RingError, phi_map, chi_map, augmentation,
                           tate_map, tate_square_check, stable_equal,
                           omega_equal, euler_degree, element,
                           phi_inverse_generator, ReesElement, rees_mul,
                           rees_equal, rees_decompose,
                           intersection_ideal_test)

srv = get_service()
lat = build_lattice(12)
u = GradedPoly.gen("u")


def d(i, j):
    return GradedPoly.gen("D", i, j)


def q(j):
    return GradedPoly.gen("q", j)


def test_presented_element_gen_validation():
    PresentedElement(d(1, 0) + q(2), RING_STABLE)
    with pytest.raises(RingError):
        PresentedElement(GradedPoly.gen("q", 0), RING_STABLE)
    with pytest.raises(RingError):
        PresentedElement(u, RING_GEOMETRIC)


def test_phi_images():
    assert phi_map(q(1), srv).is_zero()
    assert phi_map(q(2), srv) == -2 * GradedPoly.gen("u", power=-1)
    assert phi_map(u, srv) == u


def test_augmentation():
    assert augmentation(q(1), srv) == GradedPoly.const(2)
    assert augmentation(q(2), srv) == srv.p(2)
    assert augmentation(d(1, 0), srv) == srv.c(1, 0)
    with pytest.raises(RingError):
        augmentation(u, srv)


def test_chi_images():
    s = chi_map(d(1, 0), srv, cutoff=4)
    for ell in range(4):
        assert s.coefficient(ell) == srv.c(1, ell)
    t = chi_map(q(2), srv, cutoff=4)
    for ell in range(4):
        assert t.coefficient(ell) == srv.p(2 + ell)


def test_tate_square_on_generators():
    for i in range(1, 3):
        for j in range(0, 3):
            assert tate_square_check(d(i, j), srv, cutoff=6,
                                     lattice=lat) == "exact"
    for j in range(1, 4):
        assert tate_square_check(q(j), srv, cutoff=6,
                                 lattice=lat) is not None


def test_omega_equal_relation_instance():
    lhs = d(1, 1) * (q(2) - srv.p(2))
    rhs = (d(1, 0) - srv.c(1, 0)) * q(3)
    assert omega_equal(element(lhs), element(rhs), srv)
    assert not omega_equal(element(q(1)), element(GradedPoly.zero()), srv)


def test_euler_degree():
    assert euler_degree(element(u ** 2), srv) == 2
    assert euler_degree(element(d(1, 0)), srv) <= 0
    assert euler_degree(element(q(2)), srv) <= 0


def test_phi_inverse_roundtrip():
    for i in range(1, 4):
        img = phi_map(phi_inverse_generator(i, srv).poly, srv)
        want = GradedPoly.gen("u", power=i + 1) * srv.d_small(i)
        assert img == want, "round-trip fails at d_%d" % i


def test_rees_relations():
    tau = ReesElement.tau()
    mu = ReesElement.mu()
    for i in range(1, 3):
        for j in range(0, 3):
            lhs = rees_mul(tau, ReesElement(0, d(i, j) - srv.c(i, j)))
            rhs = rees_mul(mu, ReesElement(0, d(i, j + 1)))
            assert rees_equal(lhs, rhs, srv, cutoff=8, lattice=lat)


def test_rees_level_enforced():
    with pytest.raises(RingError):
        ReesElement(0, u)
    ReesElement(1, u)


def test_rees_decompose():
    r = ReesElement(1, u * d(1, 0) + q(2))
    parts = rees_decompose(r)
    assert set(parts) == {0, 1}
    assert parts[1].poly == d(1, 0)


def test_intersection_ideal_trivial():
    ok, failures = intersection_ideal_test({}, 3, srv, lat)
    assert ok and not failures
    # n = 1 imposes no conditions
    alpha = {(("q", 1),): GradedPoly.const(1)}
    ok, _ = intersection_ideal_test(alpha, 1, srv, lat)
    assert ok

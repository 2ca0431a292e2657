import pytest

from equifgl.poly import GradedPoly
from equifgl.lattice import build_lattice, partitions, NotInLattice

lat = build_lattice(12)
b1 = GradedPoly.gen("b", 1)
b2 = GradedPoly.gen("b", 2)


def test_partition_counts():
    assert [len(partitions(k)) for k in range(7)] == [1, 1, 2, 3, 5, 7, 11]


def test_rank_equals_partitions():
    for k in range(7):
        assert lat.rank(2 * k) == len(partitions(k))


def test_degree_two_basis():
    # the degree-2 lattice is generated by 2*b1
    assert lat.contains(2 * b1)
    assert not lat.contains(b1)


def test_member_coordinates():
    elem = 2 * b1
    coords = lat.member(elem)
    assert coords is not None
    with pytest.raises(NotInLattice):
        lat.member(b1)


def test_mod2_class():
    # 2*b1 is the basis vector itself, so odd coordinates
    assert lat.mod2_class(2 * b1) == [1]
    assert lat.mod2_class(4 * b1) == [0]
    assert lat.mod2_class(6 * b1) == [1]


def test_products_stay_inside():
    x = 2 * b1
    y = 2 * b1 ** 2 + 3 * b2  # a degree-4 lattice element
    assert lat.contains(y)
    assert lat.contains(x * y)
    assert lat.contains(x * x)


def test_is_even():
    assert lat.is_even(4 * b1)
    assert not lat.is_even(2 * b1)

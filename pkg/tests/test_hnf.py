import random

from hypothesis import given, strategies as st

from equifgl.hnf import (IntLattice, hnf_rows, solve_int, smith_invariants,
                         cokernel_description, int_rank)


def test_lattice_membership():
    lat = IntLattice(3)
    lat.add([2, 0, 0])
    lat.add([0, 3, 0])
    assert lat.contains([4, 3, 0])
    assert not lat.contains([1, 0, 0])
    assert not lat.contains([0, 0, 1])
    assert lat.rank() == 2


def test_coordinates_roundtrip():
    lat = IntLattice(2)
    lat.add([2, 1])
    lat.add([0, 3])
    v = [4, 8]
    coords = lat.coordinates(v)
    assert coords is not None
    recon = [sum(c * b[k] for c, b in zip(coords, lat.rows))
             for k in range(2)]
    assert recon == v
    assert lat.coordinates([1, 0]) is None


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3),
                min_size=1, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_int_correctness(rows, coeffs):
    target = [0, 0, 0]
    for c, row in zip(coeffs, rows):
        target = [t + c * x for t, x in zip(target, row)]
    sol = solve_int(rows, target)
    assert sol is not None
    recon = [0, 0, 0]
    for c, row in zip(sol, rows):
        recon = [t + c * x for t, x in zip(recon, row)]
    assert recon == target


def test_solve_int_no_solution():
    assert solve_int([[2, 0], [0, 2]], [1, 0]) is None


def test_smith_invariants():
    assert smith_invariants([[2, 0], [0, 3]], 2) == [1, 6] or \
        smith_invariants([[2, 0], [0, 3]], 2) == [2, 3]
    # diag(2,3) has cokernel Z/6, so invariants multiply to 6
    invs = smith_invariants([[2, 0], [0, 3]], 2)
    prod = 1
    for d in invs:
        prod *= d
    assert prod == 6


def test_cokernel_description():
    free, torsion = cokernel_description([[2, 0, 0], [0, 3, 0]], 3)
    assert free == 1
    assert torsion in ([6], [2, 3])


def test_hnf_rows_shape():
    rows = hnf_rows([[4, 2], [2, 0]])
    assert len(rows) == 2
    # pivots are positive and echelon
    assert rows[0][0] > 0


def test_randomized_membership_consistency():
    rng = random.Random(0)
    for _ in range(30):
        n = rng.randint(2, 4)
        gens = [[rng.randint(-4, 4) for _ in range(n)]
                for _ in range(rng.randint(1, 4))]
        lat = IntLattice(n)
        for g in gens:
            lat.add(g)
        combo = [0] * n
        for g in gens:
            c = rng.randint(-3, 3)
            combo = [a + c * x for a, x in zip(combo, g)]
        assert lat.contains(combo)


@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4),
                min_size=1, max_size=6))
def test_int_rank_matches_hnf(rows):
    h = hnf_rows(rows)
    assert int_rank(rows) == sum(1 for r in h if any(r))

import pytest

from equifgl.fgl import get_service
from equifgl.lattice import build_lattice
from equifgl.graded import (omega_monomials_upto, gr_rank, gr_rank_oracle,
                            graded_piece, OutOfImplementedRange)

srv = get_service()
lat = build_lattice(16)


def test_omega_monomial_counts():
    want = [2, 4, 10, 22, 48, 96, 192]
    for w, expect in enumerate(want):
        assert len(omega_monomials_upto(w)) == expect, (w, expect)
    monos = omega_monomials_upto(3)
    assert len(set(monos)) == len(monos)


def test_gr_rank_matches_oracle_low_degrees():
    for n in (1, 2):
        for t in range(-2 * n, 7, 2):
            assert gr_rank(n, t, lattice=lat, service=srv) == \
                gr_rank_oracle(n, t), (n, t)


def test_graded_piece_top_cell():
    piece = graded_piece(-2, -2, degree_bound=12, service=srv, lattice=lat)
    assert piece["free_rank"] == 1
    assert not piece["torsion"]


def test_graded_piece_out_of_range():
    with pytest.raises(OutOfImplementedRange):
        graded_piece(4, -40, degree_bound=12, service=srv, lattice=lat)

"""Per-degree integer lattice model of the bordism coefficient ring.

The coefficient ring embeds into Z[b1, b2, ...]; in topological degree 2k it
is the sublattice spanned by all monomials in the group law coefficients
a_{i,j}.  Each degree is kept in Hermite normal form over the basis of
b-monomials (partitions of k), giving exact membership, coordinates, and
mod-2 classes.
"""

from __future__ import annotations

from .poly import GradedPoly, gen, SymbolicError
from .hnf import IntLattice
from .fgl import get_service, SIGN_PLUS


class NotInLattice(SymbolicError):
    pass


def partitions(n, max_part=None):
    """Partitions of n as weakly decreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def b_monomials(k):
    """Monomials of Z[b] in degree 2k, sorted; the ambient basis."""
    monos = []
    for part in partitions(k):
        counts = {}
        for p in part:
            counts[p] = counts.get(p, 0) + 1
        monos.append(tuple(sorted(((gen("b", i)), e) for i, e in counts.items())))
    return sorted(monos)


class DegreeLattice:
    def __init__(self, k, monos, lat):
        self.k = k                  # topological degree 2k
        self.monos = monos          # ambient b-monomial basis
        self.index = {m: i for i, m in enumerate(monos)}
        self.lat = lat

    def vector(self, poly):
        vec = [0] * len(self.monos)
        for m, c in poly.terms.items():
            if m not in self.index:
                raise NotInLattice("monomial %r outside degree-%d ambient space"
                                   % (m, 2 * self.k))
            vec[self.index[m]] = c
        return vec

    def rank(self):
        return self.lat.rank()

    def member(self, poly):
        """Coordinates in the HNF basis, or None."""
        if poly.is_zero():
            return [0] * self.lat.rank()
        return self.lat.coordinates(self.vector(poly))

    def basis_polys(self):
        out = []
        for row in self.lat.rows:
            p = GradedPoly.zero()
            for mono, c in zip(self.monos, row):
                if c:
                    p = p + GradedPoly({mono: c})
            out.append(p)
        return out


class LatticeModel:
    """Lattice model of the coefficient ring up to a degree bound."""

    def __init__(self, max_degree, sign=SIGN_PLUS):
        if max_degree % 2:
            raise SymbolicError("degree bound must be even")
        self.max_degree = max_degree
        self.sign = sign
        self.service = get_service(sign)
        self.degrees = {}
        for k in range(max_degree // 2 + 1):
            self.degrees[k] = self._build_degree(k)

    def _gens_for(self, k):
        """a_{i,j} generators of degree <= 2k as (weight, poly)."""
        out = []
        srv = self.service
        for w in range(1, k + 1):           # weight w: degree 2w, i+j = w+1
            for i in range(1, w + 1):
                j = w + 1 - i
                if j < i:
                    break
                poly = srv.a(i, j)
                if poly:
                    out.append((w, poly))
        return out

    def _build_degree(self, k):
        monos = b_monomials(k)
        lat = IntLattice(len(monos))
        deg = DegreeLattice(k, monos, lat)
        if k == 0:
            lat.add([1])
            return deg
        gens = self._gens_for(k)

        def rec(start, remaining, acc):
            if remaining == 0:
                lat.add(deg.vector(acc))
                return
            for g in range(start, len(gens)):
                w, poly = gens[g]
                if w > remaining:
                    continue
                rec(g, remaining - w, acc * poly)

        rec(0, k, GradedPoly.const(1))
        return deg

    def degree_lattice(self, degree):
        """DegreeLattice for (even, nonnegative) topological degree."""
        if degree % 2 or degree < 0:
            raise NotInLattice("no lattice in degree %d" % degree)
        k = degree // 2
        if k not in self.degrees:
            raise NotInLattice("degree %d beyond built bound %d"
                               % (degree, self.max_degree))
        return self.degrees[k]

    def member(self, poly):
        """Coordinates of a homogeneous Z[b] polynomial, or raise."""
        if poly.is_zero():
            return []
        deg = poly.degree()
        if deg[1] != 0:
            raise NotInLattice("nonzero twisted degree")
        coords = self.degree_lattice(deg[0]).member(poly)
        if coords is None:
            raise NotInLattice("polynomial %s not in the coefficient lattice"
                               % poly.render())
        return coords

    def contains(self, poly):
        try:
            self.member(poly)
            return True
        except NotInLattice:
            return False

    def mod2_class(self, poly):
        """Coordinates mod 2 in the HNF basis of the relevant degree."""
        return [c % 2 for c in self.member(poly)]

    def is_even(self, poly):
        """True when poly lies in twice the lattice."""
        return all(c == 0 for c in self.mod2_class(poly))

    def rank(self, degree):
        return self.degree_lattice(degree).rank()


_lattices = {}


def build_lattice(max_degree, sign=SIGN_PLUS):
    key = (max_degree, sign)
    if key not in _lattices:
        _lattices[key] = LatticeModel(max_degree, sign)
    return _lattices[key]

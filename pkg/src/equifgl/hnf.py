"""Exact integer linear algebra: Hermite forms, membership, Smith form."""

from __future__ import annotations


def _xgcd(a, b):
    """(g, s, t) with g = gcd(a, b) > 0 and s*a + t*b = g."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


class IntLattice:
    """Row lattice in Z^n kept in (row-style) Hermite normal form.

    Rows are reduced incrementally; pivots are positive and entries above a
    pivot are reduced to the range [0, pivot).
    """

    def __init__(self, ambient):
        self.ambient = ambient
        self.rows = []          # basis rows, sorted by pivot column
        self.pivots = []        # pivot column of each row

    def rank(self):
        return len(self.rows)

    def add(self, vec):
        """Add a vector to the lattice; returns True if rank grew."""
        if len(vec) != self.ambient:
            raise ValueError("dimension mismatch")
        vec = list(vec)
        grew = False
        for j in range(self.ambient):
            if vec[j] == 0:
                continue
            pos = self._row_at(j)
            if pos is None:
                if vec[j] < 0:
                    vec = [-x for x in vec]
                ins = 0
                while ins < len(self.pivots) and self.pivots[ins] < j:
                    ins += 1
                self.rows.insert(ins, vec)
                self.pivots.insert(ins, j)
                grew = True
                break
            row = self.rows[pos]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [x - q * y for x, y in zip(vec, row)]
            else:
                g, s, t = _xgcd(a, b)
                qa, qb = a // g, b // g
                new_row = [s * x + t * y for x, y in zip(row, vec)]
                vec = [qa * y - qb * x for x, y in zip(row, vec)]
                self.rows[pos] = new_row
        self._reduce_up()
        return grew

    def _row_at(self, col):
        for r, piv in enumerate(self.pivots):
            if piv == col:
                return r
            if piv > col:
                return None
        return None

    def _reduce_up(self):
        for r in range(len(self.rows)):
            piv = self.pivots[r]
            a = self.rows[r][piv]
            for r2 in range(r):
                q = self.rows[r2][piv] // a
                if q:
                    self.rows[r2] = [x - q * y
                                     for x, y in zip(self.rows[r2], self.rows[r])]

    def coordinates(self, vec):
        """Coordinates of vec in the HNF basis, or None if not a member."""
        if len(vec) != self.ambient:
            raise ValueError("dimension mismatch")
        vec = list(vec)
        coords = [0] * len(self.rows)
        for r, (row, piv) in enumerate(zip(self.rows, self.pivots)):
            if vec[piv] == 0:
                continue
            if vec[piv] % row[piv]:
                return None
            q = vec[piv] // row[piv]
            coords[r] = q
            for j in range(piv, self.ambient):
                vec[j] -= q * row[j]
        if any(vec):
            return None
        return coords

    def contains(self, vec):
        return self.coordinates(vec) is not None


def hnf_rows(rows, ambient=None):
    """Hermite normal form basis of the row span."""
    if ambient is None:
        ambient = len(rows[0]) if rows else 0
    lat = IntLattice(ambient)
    for r in rows:
        lat.add(list(r))
    return [list(r) for r in lat.rows]


def solve_int(rows, target):
    """One integer solution x of x . rows = target, or None.

    ``rows`` generate a lattice; returns coefficients over the given rows.
    """
    if not rows:
        return [] if not any(target) else None
    n = len(rows[0])
    k = len(rows)
    # augment each row with bookkeeping columns recording the combination
    lat = IntLattice(n + k)
    for i, r in enumerate(rows):
        aug = list(r) + [0] * k
        aug[n + i] = 1
        lat.add(aug)
    # reduce target against the lattice projected to the first n columns
    vec = list(target) + [0] * k
    for row, piv in zip(lat.rows, lat.pivots):
        if piv >= n:
            continue
        if vec[piv] == 0:
            continue
        if vec[piv] % row[piv]:
            return None
        q = vec[piv] // row[piv]
        for j in range(n + k):
            vec[j] -= q * row[j]
    if any(vec[:n]):
        return None
    return [-x for x in vec[n:]]


def int_rank(rows):
    """Rank of an integer matrix by sparse fraction-free elimination.

    Much faster than a Hermite or Smith reduction when only the rank is
    needed; pivots are chosen for sparsity and rows are divided by their
    content to keep entries small.
    """
    from math import gcd
    work = [{j: x for j, x in enumerate(r) if x} for r in rows]
    work = [r for r in work if r]
    rank = 0
    while work:
        pi = min(range(len(work)), key=lambda i: len(work[i]))
        prow = work.pop(pi)
        pc, pv = min(prow.items(), key=lambda kv: (abs(kv[1]), kv[0]))
        rank += 1
        new = []
        for r in work:
            x = r.get(pc)
            if not x:
                new.append(r)
                continue
            g = gcd(x, pv)
            a, b = pv // g, x // g
            merged = {j: a * v for j, v in r.items()}
            for j, v in prow.items():
                w = merged.get(j, 0) - b * v
                if w:
                    merged[j] = w
                else:
                    merged.pop(j, None)
            if merged:
                g2 = 0
                for v in merged.values():
                    g2 = gcd(g2, v)
                if g2 > 1:
                    merged = {j: v // g2 for j, v in merged.items()}
                new.append(merged)
        work = new
    return rank


def smith_invariants(rows, ncols):
    """Nonzero elementary divisors of the integer matrix (list of rows)."""
    mat = [list(r) for r in rows if any(r)]
    divisors = []
    while mat and ncols:
        # find smallest nonzero entry
        br, bc, bv = None, None, None
        for i, row in enumerate(mat):
            for j, x in enumerate(row):
                if x and (bv is None or abs(x) < abs(bv)):
                    br, bc, bv = i, j, x
        if bv is None:
            break
        while True:
            # clear column bc
            dirty = False
            for i in range(len(mat)):
                if i == br or mat[i][bc] == 0:
                    continue
                q = mat[i][bc] // mat[br][bc]
                mat[i] = [x - q * y for x, y in zip(mat[i], mat[br])]
                if mat[i][bc]:
                    br = i
                    dirty = True
                    break
            if dirty:
                continue
            # clear row br
            for j in range(len(mat[br])):
                if j == bc or mat[br][j] == 0:
                    continue
                q = mat[br][j] // mat[br][bc]
                for row in mat:
                    row[j] -= q * row[bc]
                if mat[br][j]:
                    bc = j
                    dirty = True
                    break
            if not dirty:
                break
        # ensure divisibility of the remaining block
        piv = abs(mat[br][bc])
        rest = [row for i, row in enumerate(mat) if i != br]
        bad = None
        for row in rest:
            for j, x in enumerate(row):
                if j != bc and x % piv:
                    bad = row
                    break
            if bad:
                break
        if bad is not None:
            mat[br] = [x + y for x, y in zip(mat[br], bad)]
            continue
        divisors.append(piv)
        mat = [[x for j, x in enumerate(row) if j != bc]
               for i, row in enumerate(mat) if i != br]
        mat = [row for row in mat if any(row)]
        ncols -= 1
    return sorted(divisors)


def cokernel_description(rows, ncols):
    """(free_rank, torsion) of Z^ncols / row-span."""
    divs = smith_invariants(rows, ncols)
    torsion = sorted(d for d in divs if d != 1)
    return ncols - len(divs), torsion

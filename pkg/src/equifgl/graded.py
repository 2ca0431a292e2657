"""Per-degree abelian group computations for the twisted-graded pieces.

The geometric ring is presented over the coefficient ring by generators
d_{i,j} (i >= 1, j >= 0) and q_j (j >= 1) modulo the relation ideal with
the four families

    R1: d_{i,j+1}(d_{k,l} - c_{k,l}) - (d_{i,j} - c_{i,j})d_{k,l+1}
    R2: d_{i,j+1}(q_l - p_l)         - (d_{i,j} - c_{i,j})q_{l+1}
    R3: q_{j+1}(q_l - p_l)           - (q_j - p_j)q_{l+1}
    q_0 = 0.

Since q_1 has degree 0 and q_1^2 = 2q_1 is a relation instance (R3 at
j=0, l=1), monomials are normalized to q_1-exponent <= 1, which leaves
finitely many monomials in each degree.  Each homogeneous degree is then
a finitely presented abelian group computed by Smith normal form over
the coefficient lattice.
"""

from __future__ import annotations

from .poly import GradedPoly, gen, SymbolicError
from .fgl import get_service, SIGN_PLUS
from .lattice import build_lattice, NotInLattice
from .hnf import cokernel_description, int_rank

_Q1 = gen("q", 1)


class OutOfImplementedRange(SymbolicError):
    pass


def _positive_gens(w):
    """Ring generators of half-degree 1..w, besides the degree-0 q_1."""
    out = []
    for h in range(1, w + 1):
        out.append((h, gen("q", h + 1)))
        for i in range(1, h):
            out.append((h, gen("D", i, h - 1 - i)))
    return out


def omega_monomials(w):
    """Normalized generator monomials of half-degree w, q_1-exponent <= 1."""
    if w < 0:
        return []
    gens = _positive_gens(w)
    monos = []

    def rec(start, remaining, acc):
        if remaining == 0:
            monos.append(acc)
            return
        for g in range(start, len(gens)):
            h, name = gens[g]
            if h > remaining:
                continue
            rec(g, remaining - h, acc + [name])

    rec(0, w, [])
    out = []
    for m in monos:
        counts = {}
        for name in m:
            counts[name] = counts.get(name, 0) + 1
        base = tuple(sorted(counts.items()))
        out.append(base)
        out.append(tuple(sorted(counts.items() | {(_Q1, 1)})))
    return sorted(set(out))


def omega_monomials_upto(w):
    """Normalized monomials of every half-degree 0..w."""
    out = []
    for w2 in range(w + 1):
        out.extend(omega_monomials(w2))
    return out


def normalize_q1(poly):
    """Rewrite q_1^k -> 2^{k-1} q_1 in every term."""
    out = {}
    for m, c in poly.terms.items():
        d = dict(m)
        e = d.get(_Q1, 0)
        if e > 1:
            d[_Q1] = 1
            c = c * (2 ** (e - 1))
        key = tuple(sorted(d.items()))
        nc = out.get(key, 0) + c
        if nc:
            out[key] = nc
        else:
            out.pop(key, None)
    return GradedPoly(out)


def split_coefficients(poly):
    """Map (generator monomial in d,q) -> coefficient in Z[b]."""
    out = {}
    for m, c in poly.terms.items():
        ring_part = []
        coef_part = []
        for g, e in m:
            if g[0] == "b":
                coef_part.append((g, e))
            elif g[0] in ("D", "q"):
                ring_part.append((g, e))
            else:
                raise SymbolicError("unexpected generator %s" % (g,))
        key = tuple(sorted(ring_part))
        cur = out.setdefault(key, GradedPoly.zero())
        out[key] = cur + GradedPoly({tuple(sorted(coef_part)): c})
    return {k: v for k, v in out.items() if v}


def relation_generators(w_max, service):
    """All relation-ideal generators of half-degree <= w_max, as polys."""
    out = []
    # R1: half-degree i+j+k+l+3, (i,j) < (k,l) lexicographically
    for h in range(3, w_max + 1):
        for i in range(1, h - 1):
            for j in range(0, h - 2 - i + 1):
                for k in range(1, h - 1):
                    l = h - 3 - i - j - k
                    if l < 0 or (k, l) <= (i, j):
                        continue
                    r = (GradedPoly.gen("D", i, j + 1)
                         * (GradedPoly.gen("D", k, l) - service.c(k, l))
                         - (GradedPoly.gen("D", i, j) - service.c(i, j))
                         * GradedPoly.gen("D", k, l + 1))
                    if r:
                        out.append((h, r))
    # R2: half-degree i+j+l+1, l >= 0 (q_0 = 0 handled by omission)
    for h in range(1, w_max + 1):
        for i in range(1, h + 1):
            for j in range(0, h - i + 1):
                l = h - 1 - i - j
                if l < 0:
                    continue
                ql = GradedPoly.gen("q", l) if l >= 1 else GradedPoly.zero()
                r = (GradedPoly.gen("D", i, j + 1) * (ql - service.p(l))
                     - (GradedPoly.gen("D", i, j) - service.c(i, j))
                     * GradedPoly.gen("q", l + 1))
                if r:
                    out.append((h, r))
    # R3: half-degree j+l-1, 0 <= j < l
    for h in range(0, w_max + 1):
        for j in range(0, (h + 1) // 2 + 1):
            l = h + 1 - j
            if l <= j:
                continue
            qj = GradedPoly.gen("q", j) if j >= 1 else GradedPoly.zero()
            ql = GradedPoly.gen("q", l) if l >= 1 else GradedPoly.zero()
            r = (GradedPoly.gen("q", j + 1) * (ql - service.p(l))
                 - (qj - service.p(j)) * GradedPoly.gen("q", l + 1))
            if r:
                out.append((h, r))
    return out


class DegreeBasis:
    """Flat basis of a direct sum of (monomial x lattice) slots."""

    def __init__(self, lattice, slot_degrees):
        self.lattice = lattice
        self.slot_degrees = slot_degrees      # slot index -> topological degree
        self.index = {}                       # (slot, mono) -> (offset, rank)
        offset = 0
        for s, deg in enumerate(slot_degrees):
            if deg < 0 or deg % 2:
                continue
            if deg > lattice.max_degree:
                raise OutOfImplementedRange(
                    "degree %d beyond lattice bound %d"
                    % (deg, lattice.max_degree))
            for m in omega_monomials_upto(deg // 2):
                mdeg = _mono_degree(m)
                r = self.lattice.rank(deg - mdeg)
                if r:
                    self.index[(s, m)] = (offset, r)
                    offset += r
        self.size = offset

    def row(self, slot_polys):
        """Coordinate row for a tuple of normalized per-slot polynomials."""
        vec = [0] * self.size
        for s, poly in enumerate(slot_polys):
            if poly is None or poly.is_zero():
                continue
            for m, coef in split_coefficients(poly).items():
                if (s, m) not in self.index:
                    raise NotInLattice("monomial slot (%d, %s) missing"
                                       % (s, m))
                offset, r = self.index[(s, m)]
                deg = self.slot_degrees[s] - _mono_degree(m)
                coords = self.lattice.degree_lattice(deg).member(coef)
                if coords is None:
                    raise NotInLattice(
                        "coefficient %s outside the lattice" % coef.render())
                for t, c in enumerate(coords):
                    vec[offset + t] += c
        return vec


def _mono_degree(m):
    return sum(2 * (g[1][0] + g[1][1] + 1) * e if g[0] == "D"
               else (2 * g[1][0] - 2) * e
               for g, e in m)


def _ideal_rows(basis, slot, degree, service):
    """Relation rows for the geometric ring's ideal within one slot."""
    rows = []
    if degree < 0 or degree % 2:
        return rows
    w = degree // 2
    for h, r in relation_generators(w, service):
        for mult in omega_monomials_upto(w - h):
            prod = normalize_q1(r * GradedPoly({mult: 1}))
            for lam in basis.lattice.degree_lattice(
                    degree - 2 * h - _mono_degree(mult)).basis_polys():
                slots = [None] * len(basis.slot_degrees)
                slots[slot] = normalize_q1(prod * lam)
                rows.append(basis.row(slots))
    return rows


def omega_degree_group(degree, lattice=None, service=None):
    """(free rank, torsion) of the geometric ring in one degree."""
    service = service or get_service()
    lattice = lattice or build_lattice(max(degree, 0))
    basis = DegreeBasis(lattice, [degree])
    rows = _ideal_rows(basis, 0, degree, service)
    return cokernel_description(rows, basis.size)


def omega_rank(degree, lattice=None, service=None):
    return omega_degree_group(degree, lattice, service)[0]


def _mixing_rows(basis, n, service, kill_q1=False):
    """Rows of u^k(d_{i,j}-c_{i,j}) = u^{k+1}d_{i,j+1} and the q analogue.

    Slot k of ``basis`` holds topological degree t + 2k; the u^k relation
    contributes to slots k and k+1.  With ``kill_q1`` the quotient by q_1
    adds q_1-multiples of every basis monomial.
    """
    rows = []
    degs = basis.slot_degrees
    for k in range(n):
        dk = degs[k]
        if dk % 2:
            continue
        wk = dk // 2
        # d-family: (d_{i,j} - c_{i,j}) has half-degree i+j+1
        for h in range(2, wk + 1):
            for i in range(1, h):
                j = h - 1 - i
                head = GradedPoly.gen("D", i, j) - service.c(i, j)
                tail = GradedPoly.gen("D", i, j + 1)
                rows.extend(_two_slot_rows(basis, k, head, tail, service))
        # q-family: j >= 0, (q_j - p_j) has half-degree j - 1
        for j in range(0, wk + 2):
            if 2 * (j - 1) > dk:
                continue
            qj = GradedPoly.gen("q", j) if j >= 1 else GradedPoly.zero()
            head = qj - service.p(j)
            tail = GradedPoly.gen("q", j + 1)
            rows.extend(_two_slot_rows(basis, k, head, tail, service))
    if kill_q1:
        q1 = GradedPoly.gen("q", 1)
        for s, deg in enumerate(degs):
            if deg < 0 or deg % 2:
                continue
            for m in omega_monomials_upto(deg // 2):
                for lam in basis.lattice.degree_lattice(
                        deg - _mono_degree(m)).basis_polys():
                    slots = [None] * len(degs)
                    slots[s] = normalize_q1(q1 * GradedPoly({m: 1}) * lam)
                    rows.append(basis.row(slots))
    return rows


def _two_slot_rows(basis, k, head, tail, service):
    """All (head at slot k) - (tail at slot k+1) rows times a full basis."""
    rows = []
    degs = basis.slot_degrees
    if head.is_zero():
        hdeg = tail.degree()[0] - 2
    else:
        hdeg = head.degree()[0]
    rest = degs[k] - hdeg
    if rest < 0 or rest % 2:
        return rows
    for m in omega_monomials_upto(rest // 2):
        for lam in basis.lattice.degree_lattice(
                rest - _mono_degree(m)).basis_polys():
            mult = GradedPoly({m: 1}) * lam
            slots = [None] * len(degs)
            slots[k] = normalize_q1(head * mult)
            slots[k + 1] = normalize_q1(-tail * mult)
            rows.append(basis.row(slots))
    return rows


def twisted_group_negative(t, n, lattice, service, kill_q1=False):
    """Group in degree t - 2n*alpha: sum of u^k slots modulo mixing rows."""
    degs = [t + 2 * k for k in range(n + 1)]
    basis = DegreeBasis(lattice, degs)
    rows = []
    for s, deg in enumerate(degs):
        rows.extend(_ideal_rows(basis, s, deg, service))
    rows.extend(_mixing_rows(basis, n, service, kill_q1=kill_q1))
    return cokernel_description(rows, basis.size)


def twisted_group_free_rank(t, n, lattice, service, kill_q1=False):
    """Free rank of the same group, skipping the torsion computation."""
    degs = [t + 2 * k for k in range(n + 1)]
    basis = DegreeBasis(lattice, degs)
    rows = []
    for s, deg in enumerate(degs):
        rows.extend(_ideal_rows(basis, s, deg, service))
    rows.extend(_mixing_rows(basis, n, service, kill_q1=kill_q1))
    return basis.size - int_rank(rows)


def odd_part_group(t, n, lattice, service):
    """coker(MU_{*-1}[u]/(u^n, c-columns, p-columns)) at odd degree t."""
    if t % 2 == 0:
        return (0, [])
    slot_degs = [t - 1 + 2 * k for k in range(n)]
    # plain MU[u] module on n slots; build the flat basis directly
    offsets, size = [], 0
    for deg in slot_degs:
        if deg < 0 or deg % 2:
            offsets.append(None)
            continue
        if deg > lattice.max_degree:
            raise OutOfImplementedRange("degree %d beyond lattice bound" % deg)
        r = lattice.rank(deg)
        offsets.append((size, r))
        size += r

    def row(slot_polys):
        vec = [0] * size
        for s, poly in enumerate(slot_polys):
            if poly is None or poly.is_zero():
                continue
            if offsets[s] is None:
                raise NotInLattice("dead slot %d" % s)
            off, _ = offsets[s]
            for idx, c in enumerate(
                    lattice.degree_lattice(slot_degs[s]).member(poly)):
                vec[off + idx] += c
        return vec

    rows = []
    # column relations: sum_{l<n} c_{i,j+l} u^l and sum_{l<n} p_{j+l} u^l,
    # times the full lattice in the complementary degree
    jmax = (max(slot_degs) // 2 if slot_degs else 0) + n + 2
    for j in range(0, jmax):
        for (kind, head_deg) in (("p", 2 * j - 2), ("c", None)):
            if kind == "p":
                series = [service.p(j + l) for l in range(n)]
                heads = [(head_deg, series)]
            else:
                heads = []
                for i in range(1, jmax):
                    heads.append((2 * (i + j + 1),
                                  [service.c(i, j + l) for l in range(n)]))
            for hdeg, series in heads:
                for shift in range(n):
                    rest = slot_degs[shift] - hdeg
                    if rest < 0 or rest % 2 or offsets[shift] is None:
                        continue
                    for lam in lattice.degree_lattice(rest).basis_polys():
                        slots = [None] * n
                        for l in range(n - shift):
                            slots[shift + l] = series[l] * lam
                        if any(s for s in slots):
                            rows.append(row(slots))
    return cokernel_description(rows, size)


def graded_piece(t, s, degree_bound=12, service=None, lattice=None,
                 kill_q1=None):
    """Abelian group description of the twisted-graded piece in degree
    t + s*alpha.  Returns a dict with at least a 'case' tag; cases with a
    complete integer-linear-algebra answer carry 'free_rank' and 'torsion'.
    """
    service = service or get_service()
    lattice = lattice or build_lattice(degree_bound)
    if s <= 0:
        n = (-s) // 2
        kill = (-s) % 2 == 1
        tt = t if not kill else t  # odd twist references the same t range
        if t + 2 * n > degree_bound:
            raise OutOfImplementedRange(
                "slot degree %d beyond bound %d" % (t + 2 * n, degree_bound))
        free, torsion = twisted_group_negative(tt, n, lattice, service,
                                               kill_q1=kill)
        return {"case": 3 if kill else 1, "t": t, "s": s,
                "free_rank": free, "torsion": torsion}
    n = s // 2
    kill = s % 2 == 1
    out = {"case": 4 if kill else 2, "t": t, "s": s}
    if t % 2 == 0:
        if t < 0 or t > degree_bound:
            raise OutOfImplementedRange("degree %d out of bounds" % t)
        q1_rank = 0 if kill else lattice.rank(t)
        out["even_part"] = {
            "q1_summand_rank": q1_rank,
            "intersection_ideal": "generators-only (see intersection test)",
        }
        out["free_rank"] = q1_rank
        out["torsion"] = []
        out["partial"] = True
    else:
        free, torsion = odd_part_group(t, n, lattice, service)
        out["odd_part"] = {"free_rank": free, "torsion": torsion}
        out["free_rank"] = free
        out["torsion"] = torsion
    return out


def gr_rank(n, t, lattice=None, service=None):
    """Rank of the n-th euler-filtration subquotient in degree t."""
    service = service or get_service()
    lattice = lattice or build_lattice(t + 2 * n if t + 2 * n > 0 else 0)
    hi = twisted_group_free_rank(t, n, lattice, service)
    lo = twisted_group_free_rank(t, n - 1, lattice, service) if n else 0
    return hi - lo


def gr_rank_oracle(n, t):
    """Rank of MU_*[d_1, d_2, ...]{u^n} in degree t (d_i in degree 2i+2)."""
    if n == 0:
        return _mu_rank(t)
    target = t + 2 * n
    if target < 0 or target % 2:
        return 0
    total = 0
    for e in range(target // 2 + 1):
        f = target // 2 - e
        total += _partition_count(e) * _partitions_min2(f)
    return total


def _mu_rank(t):
    if t < 0 or t % 2:
        return 0
    return _partition_count(t // 2)


def _partition_count(k, cache={}):
    if k not in cache:
        cache[k] = _partitions_bounded(k, k)
    return cache[k]


def _partitions_bounded(k, max_part):
    if k == 0:
        return 1
    return sum(_partitions_bounded(k - p, p)
               for p in range(1, min(k, max_part) + 1))


def _partitions_min2(k, max_part=None):
    """Partitions of k into parts >= 2."""
    if k == 0:
        return 1
    if max_part is None:
        max_part = k
    return sum(_partitions_min2(k - p, p)
               for p in range(2, min(k, max_part) + 1))

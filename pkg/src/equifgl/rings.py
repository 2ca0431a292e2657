"""Presented models of the involutive bordism rings and their comparison maps.

Two presented rings share one generator alphabet:

  * the stable ring, generated over the coefficient ring by u, d_{i,j}, q_j
    (families 'u', 'D', 'q');
  * the geometric ring, the u-free subring generated by d_{i,j}, q_j.

Elements are GradedPoly values in those generators with coefficient-ring
scalars written as Z[b] polynomials.  Detection maps:

  phi   -> Z[b, bp][u^{+-1}]        (geometric fixed points model)
  chi   -> Z[b][[u]] / doubling     (Borel-complete model, truncated)
  aug   -> Z[b]                     (u -> undefined; augmentation of the
                                     geometric ring, d_{i,j} -> c_{i,j})
  psi   -> Z[b]((u)) / doubling     (Tate model, from the phi target)

Equality in the stable ring is detected by (phi, chi); equality in the
geometric ring by (aug, phi).
"""

from __future__ import annotations

from .poly import GradedPoly, gen, SymbolicError
from .fgl import get_service, SIGN_PLUS

_U = gen("u")

RING_STABLE = "stable"
RING_GEOMETRIC = "geometric"


class RingError(SymbolicError):
    pass


class PresentedElement:
    """An element of one of the presented rings."""

    __slots__ = ("poly", "ring")

    def __init__(self, poly, ring=RING_STABLE):
        if ring not in (RING_STABLE, RING_GEOMETRIC):
            raise RingError("unknown ring %r" % ring)
        for g in poly.generators():
            if g[0] == "q" and g[1][0] < 1:
                raise RingError("q_0 is zero in the presentation; use 0")
            if g[0] not in ("u", "D", "q", "b"):
                raise RingError("generator %s not in the presentation"
                                % g[0])
            if g[0] == "u" and ring == RING_GEOMETRIC:
                raise RingError("u is not an element of the geometric ring")
        self.poly = poly
        self.ring = ring

    @classmethod
    def from_poly(cls, poly, ring=RING_STABLE):
        return cls(poly, ring)

    def __add__(self, other):
        return PresentedElement(self.poly + other.poly,
                                self._join(other))
    def __sub__(self, other):
        return PresentedElement(self.poly - other.poly, self._join(other))

    def __mul__(self, other):
        if isinstance(other, (int, GradedPoly)):
            return PresentedElement(self.poly * other, self.ring)
        return PresentedElement(self.poly * other.poly, self._join(other))

    def __neg__(self):
        return PresentedElement(-self.poly, self.ring)

    def _join(self, other):
        if self.ring == other.ring:
            return self.ring
        return RING_STABLE

    def degree(self):
        return self.poly.degree()

    def render(self):
        return self.poly.render()

    def __repr__(self):
        return "PresentedElement(%s, %s)" % (self.poly.render(), self.ring)


def element(poly, ring=RING_STABLE):
    return PresentedElement(poly, ring)


# ---------------------------------------------------------------------------
# truncated u-power series over Z[b], used for the Borel/Tate models
# ---------------------------------------------------------------------------

class USeries:
    """Laurent series in u over Z[b], supported in [lo, cutoff)."""

    __slots__ = ("coeffs", "cutoff")

    def __init__(self, coeffs, cutoff):
        self.cutoff = cutoff
        self.coeffs = {j: p for j, p in coeffs.items() if p and j < cutoff}

    @classmethod
    def const(cls, poly, cutoff):
        if isinstance(poly, int):
            poly = GradedPoly.const(poly)
        return cls({0: poly}, cutoff)

    @classmethod
    def from_poly(cls, poly, cutoff):
        """Split a GradedPoly containing u into a u-series."""
        return cls(poly.split_by(_U), cutoff)

    def lo(self):
        return min(self.coeffs) if self.coeffs else 0

    def __add__(self, other):
        cutoff = min(self.cutoff, other.cutoff)
        out = dict(self.coeffs)
        for j, p in other.coeffs.items():
            q = out.get(j, GradedPoly.zero()) + p
            if q:
                out[j] = q
            else:
                out.pop(j, None)
        return USeries(out, cutoff)

    def __neg__(self):
        return USeries({j: -p for j, p in self.coeffs.items()}, self.cutoff)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        cutoff = min(self.cutoff, other.cutoff)
        out = {}
        for j1, p1 in self.coeffs.items():
            for j2, p2 in other.coeffs.items():
                j = j1 + j2
                if j >= cutoff:
                    continue
                q = p1 * p2
                if j in out:
                    out[j] = out[j] + q
                else:
                    out[j] = q
        return USeries(out, cutoff)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, USeries) and self.coeffs == other.coeffs

    def coefficient(self, j):
        return self.coeffs.get(j, GradedPoly.zero())

    def render(self):
        if not self.coeffs:
            return "0"
        bits = []
        for j in sorted(self.coeffs):
            p = self.coeffs[j].render()
            if j == 0:
                bits.append("(%s)" % p)
            else:
                bits.append("(%s)*u^%d" % (p, j))
        return " + ".join(bits) + " + O(u^%d)" % self.cutoff


# ---------------------------------------------------------------------------
# the comparison maps
# ---------------------------------------------------------------------------

def phi_on_generator(g, service, include_negative=True):
    """phi image of a presentation generator, in Z[b, bp][u^{+-1}]."""
    family, idx = g
    if family == "u":
        return GradedPoly.gen("u")
    if family == "b":
        return GradedPoly.gen("b", idx[0])
    if family == "D":
        i, j = idx
        out = service.d_small(i) * GradedPoly.gen("u", power=-j)
        lo = -(i + 1) if include_negative else 0
        for ell in range(lo, j):
            cil = service.c(i, ell)
            if cil:
                out = out - cil * GradedPoly.gen("u", power=ell - j)
        return out
    if family == "q":
        (j,) = idx
        out = GradedPoly.zero()
        for ell in range(j):
            pl = service.p(ell)
            if pl:
                out = out - pl * GradedPoly.gen("u", power=ell - j)
        return out
    raise RingError("phi undefined on generator %s" % (g,))


def phi_map(elem, service=None, include_negative=True):
    """Geometric-fixed-points image, exactly (a Laurent polynomial in u)."""
    service = service or get_service()
    poly = elem.poly if isinstance(elem, PresentedElement) else elem
    mapping = {}
    for g in poly.generators():
        if g[0] in ("D", "q"):
            mapping[g] = phi_on_generator(g, service, include_negative)
    return poly.substitute(mapping)


def augmentation(elem, service=None):
    """Geometric-ring augmentation d_{i,j} -> c_{i,j}, q_j -> p_j."""
    service = service or get_service()
    if isinstance(elem, PresentedElement):
        if elem.ring != RING_GEOMETRIC:
            for g in elem.poly.generators():
                if g[0] == "u":
                    raise RingError("augmentation is undefined on u")
        poly = elem.poly
    else:
        poly = elem
    mapping = {}
    for g in poly.generators():
        if g[0] == "D":
            mapping[g] = service.c(*g[1])
        elif g[0] == "q":
            mapping[g] = service.p(g[1][0])
        elif g[0] == "u":
            raise RingError("augmentation is undefined on u")
    return poly.substitute(mapping)


def chi_on_generator(g, service, cutoff):
    family, idx = g
    if family == "u":
        return USeries({1: GradedPoly.const(1)}, cutoff)
    if family == "b":
        return USeries.const(GradedPoly.gen("b", idx[0]), cutoff)
    if family == "D":
        i, j = idx
        return USeries({ell: service.c(i, j + ell) for ell in range(cutoff)},
                       cutoff)
    if family == "q":
        (j,) = idx
        return USeries({ell: service.p(j + ell) for ell in range(cutoff)},
                       cutoff)
    raise RingError("chi undefined on generator %s" % (g,))


def chi_map(elem, service=None, cutoff=8):
    """Borel-model image as a truncated power series in u over Z[b]."""
    service = service or get_service()
    poly = elem.poly if isinstance(elem, PresentedElement) else elem
    out = USeries.const(0, cutoff)
    images = {}
    for mono, c in poly.terms.items():
        acc = USeries.const(c, cutoff)
        for g, e in mono:
            if g not in images:
                images[g] = chi_on_generator(g, service, cutoff)
            if e < 0:
                raise RingError("negative exponent under chi")
            for _ in range(e):
                acc = acc * images[g]
        out = out + acc
    return out


def tate_map(poly, service=None, cutoff=8):
    """Tate-model image of a Z[b, bp][u^{+-1}] polynomial.

    Determined by u*bp_i -> sum_j a_{i,j} u^j, i.e. bp_i -> u^{-1} A_i(u).
    Returns a truncated Laurent series in u.

    Each bp factor and each negative u power can shift terms downward, so
    products are computed with extra headroom before the final truncation.
    """
    service = service or get_service()
    # headroom: total downward shift any monomial can apply
    pad = 0
    for mono in poly.terms:
        shift = 0
        for g, e in mono:
            if g[0] == "bp":
                shift += e
            elif g[0] == "u" and e < 0:
                shift -= e
        pad = max(pad, shift)
    work = cutoff + pad
    out = USeries.const(0, work)
    images = {}
    for mono, c in poly.terms.items():
        acc = USeries.const(c, work)
        for g, e in mono:
            if g[0] == "u":
                acc = acc * USeries({e: GradedPoly.const(1)}, work)
                continue
            if g[0] == "b":
                acc = acc * USeries.const(GradedPoly.gen("b", g[1][0]) ** e,
                                          work)
                continue
            if g[0] != "bp":
                raise RingError("tate map undefined on %s" % (g,))
            if g not in images:
                i = g[1][0]
                images[g] = USeries(
                    {j - 1: service.a(i, j) for j in range(work + 2)},
                    work)
            for _ in range(e):
                acc = acc * images[g]
        out = out + acc
    return USeries(out.coeffs, cutoff)


# ---------------------------------------------------------------------------
# reduction modulo the doubling series
# ---------------------------------------------------------------------------

def reduce_mod_doubling(series, service=None, lattice=None, laurent=None):
    """Decide whether a u-series lies in the ideal of the doubling series.

    In the power-series model the ideal is generated by
    [2]u = 2u + p_2 u^2 + ...; once u is inverted (``laurent``) it is
    generated by the unit-shifted 2 + p_2 u + ... .  Works by triangular
    division from the bottom coefficient; each step divides by 2 in Z[b].
    When a lattice model is supplied and covers the degree, quotient
    coefficients are also checked to lie in the coefficient lattice.
    Returns True when the series is in the ideal up to truncation order.
    """
    service = service or get_service()
    if series.is_zero():
        return True
    lo = series.lo()
    if laurent is None:
        laurent = lo < 0
    if not laurent:
        # ideal generated by u * (2 + p_2 u + ...): constant term must vanish
        if series.coefficient(0):
            return False
        shifted = USeries({j - 1: p for j, p in series.coeffs.items()},
                          series.cutoff - 1)
    else:
        shifted = series
    # divide by 2 + p_2 u + p_3 u^2 + ...
    rem = {j: p for j, p in shifted.coeffs.items()}
    cutoff = shifted.cutoff
    jlo = min(rem) if rem else 0
    for j in range(jlo, cutoff):
        cur = rem.get(j)
        if not cur:
            continue
        if not cur.content_divisible_by(2):
            return False
        g = cur.exact_div(2)
        if lattice is not None:
            deg = g.degree()
            if deg is not None and deg[1] == 0 and 0 <= deg[0] <= lattice.max_degree:
                if not lattice.contains(g):
                    return False
        for t in range(2, cutoff - j + 1):
            pt = service.p(t)
            if pt:
                key = j + t - 1
                if key < cutoff:
                    val = rem.get(key, GradedPoly.zero()) - g * pt
                    if val:
                        rem[key] = val
                    else:
                        rem.pop(key, None)
        rem.pop(j, None)
    return not any(rem.values())


def useries_equal_mod_doubling(s1, s2, service=None, lattice=None,
                               laurent=None):
    return reduce_mod_doubling(s1 - s2, service, lattice, laurent)


def tate_square_check(elem, service=None, cutoff=8, lattice=None):
    """Commutativity of the detection square on one element.

    Returns 'exact' if tate(phi(x)) == chi(x) on the nose, 'doubling' if
    they agree modulo the doubling ideal (u inverted), else None.
    """
    service = service or get_service()
    lhs = tate_map(phi_map(elem, service), service, cutoff)
    rhs = chi_map(elem, service, cutoff)
    if lhs == rhs:
        return "exact"
    if useries_equal_mod_doubling(lhs, rhs, service, lattice, laurent=True):
        return "doubling"
    return None


# ---------------------------------------------------------------------------
# equality detection and the euler filtration
# ---------------------------------------------------------------------------

def stable_equal(e1, e2, service=None, cutoff=8, lattice=None):
    """Equality in the stable ring, via the (phi, chi) detection pair."""
    service = service or get_service()
    if phi_map(e1, service) != phi_map(e2, service):
        return False
    return useries_equal_mod_doubling(chi_map(e1, service, cutoff),
                                      chi_map(e2, service, cutoff),
                                      service, lattice)


def omega_equal(e1, e2, service=None):
    """Equality in the geometric ring, via the (augmentation, phi) pair."""
    service = service or get_service()
    if augmentation(e1, service) != augmentation(e2, service):
        return False
    return phi_map(e1, service) == phi_map(e2, service)


def euler_degree(elem, service=None):
    """Top u-exponent of the phi image (None for phi-kernel elements)."""
    img = phi_map(elem, service)
    if img.is_zero():
        return None
    return img.exponent_range(_U)[1]


def euler_level(elem, service=None):
    """Smallest filtration level containing the element."""
    d = euler_degree(elem, service)
    return 0 if d is None else max(d, 0)


def phi_inverse_generator(i, service=None):
    """Stable element whose phi image is u^{i+1} d_i (the u-local inverse).

    After inverting u, d_i pulls back to d_{i,0} + sum_{j<0} c_{i,j} u^j;
    clearing denominators by u^{i+1} gives an honest element.
    """
    service = service or get_service()
    poly = GradedPoly.gen("u", power=i + 1) * GradedPoly.gen("D", i, 0)
    for j in range(-(i + 1), 0):
        cij = service.c(i, j)
        if cij:
            poly = poly + cij * GradedPoly.gen("u", power=i + 1 + j)
    return PresentedElement(poly, RING_STABLE)


# ---------------------------------------------------------------------------
# Rees-algebra model of the extended coefficient ring
# ---------------------------------------------------------------------------

class ReesElement:
    """Element of the extended ring, embedded in (stable ring)[tau^{+-1}].

    The class mu maps to u*tau and the geometric ring sits at level 0; a
    level-n element is tau^n times a stable element of euler level <= n.
    """

    __slots__ = ("level", "elem")

    def __init__(self, level, elem, service=None, check=True):
        if isinstance(elem, GradedPoly):
            elem = PresentedElement(elem, RING_STABLE)
        if check:
            lvl = euler_level(elem, service)
            if lvl > max(level, 0):
                raise RingError(
                    "euler level %d exceeds filtration level %d" % (lvl, level))
        self.level = level
        self.elem = elem

    @classmethod
    def tau(cls):
        return cls(1, PresentedElement(GradedPoly.const(1)))

    @classmethod
    def mu(cls):
        return cls(1, PresentedElement(GradedPoly.gen("u")))

    def render(self):
        return "tau^%d * (%s)" % (self.level, self.elem.render())


def rees_mul(r1, r2, service=None):
    return ReesElement(r1.level + r2.level, r1.elem * r2.elem, service)


def rees_equal(r1, r2, service=None, cutoff=8, lattice=None):
    if r1.level != r2.level:
        return False
    return stable_equal(r1.elem, r2.elem, service, cutoff, lattice)


def rees_decompose(r):
    """Write a level-n element as sum_k b_k u^k with u-free b_k."""
    parts = r.elem.poly.split_by(_U)
    return {k: PresentedElement(p, RING_GEOMETRIC) for k, p in parts.items()}


# ---------------------------------------------------------------------------
# membership family for powers of the euler class
# ---------------------------------------------------------------------------

def intersection_ideal_test(alpha, n, service=None, lattice=None):
    """Check the mod-2 congruences cutting out u^n-divisible combinations.

    ``alpha`` maps difference-monomials to coefficient polynomials in Z[b].
    A difference-monomial is a tuple of factors ('D', i, j) or ('q', j),
    standing for (d_{i,j} - c_{i,j}) resp. (q_j - p_j).  The test requires,
    for each 1 <= k <= n-1, that

        sum_m alpha_m * (coefficient of u^k in chi(m))  =  0  mod 2

    where chi(d_{i,j} - c_{i,j}) = sum_{l>=1} c_{i,j+l} u^l and
    chi(q_j - p_j) = sum_{l>=1} p_{j+l} u^l.  Requires a lattice model to
    decide the mod-2 vanishing; returns (ok, failures).
    """
    service = service or get_service()
    if lattice is None:
        raise RingError("intersection test needs a lattice model")
    failures = []
    for k in range(1, n):
        total = GradedPoly.zero()
        for mono, coef in alpha.items():
            if len(mono) > k:
                continue
            series = USeries.const(1, n)
            for factor in mono:
                if factor[0] == "D":
                    _, i, j = factor
                    series = series * USeries(
                        {l: service.c(i, j + l) for l in range(1, n)}, n)
                elif factor[0] == "q":
                    _, j = factor
                    series = series * USeries(
                        {l: service.p(j + l) for l in range(1, n)}, n)
                else:
                    raise RingError("bad difference-monomial factor %r"
                                    % (factor,))
            phi_k = series.coefficient(k)
            if phi_k:
                total = total + coef * phi_k
        if total and not lattice.is_even(total):
            failures.append((k, total))
    return (not failures, failures)

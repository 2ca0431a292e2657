"""Connective equivariant K-theory coefficients and Mackey charts.

The ring R(C2) = Z[sigma]/(sigma^2 - 1) has augmentation ideal
J = (sigma - 1).  The extended coefficient ring of connective
equivariant K-theory is R(C2)[v, mu, tau] modulo tau(sigma-1) = v mu
and mu(sigma+1) = 0; a terminating, confluent rewriting system puts
every element into a unique normal form, and inverting tau (then
setting tau = 1) lands in Z[u,v]/(2u + vu^2).

The RO(C2)-graded chart assigns one Mackey-functor label to each
bidegree (x, y) = (trivial part, sign part); the closed forms cover a
kernel range of cyclic J-powers, a cokernel range of J-power quotients,
and constant/dual regions, with the odd-y rows derived from the
even-row data through a cofiber sequence and marked as such.
"""

from __future__ import annotations

import random

from .poly import GradedPoly, gen, SymbolicError
from .hnf import IntLattice

_SIGMA = gen("sigma")
_V = gen("v")
_MU = gen("mu")
_TAU = gen("tau")
_U = gen("u")


class TwoTorsionCoefficientRing(SymbolicError):
    pass


class RC2Element:
    """a + b sigma in Z[sigma]/(sigma^2 - 1)."""

    def __init__(self, a, b=0):
        self.a = a
        self.b = b

    def __add__(self, other):
        return RC2Element(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return RC2Element(self.a - other.a, self.b - other.b)

    def __mul__(self, other):
        return RC2Element(self.a * other.a + self.b * other.b,
                          self.a * other.b + self.b * other.a)

    def __eq__(self, other):
        return isinstance(other, RC2Element) and \
            (self.a, self.b) == (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def augmentation(self):
        return self.a + self.b

    def sign_map(self):
        return self.a - self.b

    def in_j_power(self, n):
        """Membership in J^n = ((sigma - 1)^n)."""
        if n <= 0:
            return True
        if self.a != -self.b:
            return False
        return self.b % (1 << (n - 1)) == 0

    def render(self):
        return "%d + %d*sigma" % (self.a, self.b)


def j_power_rank(n):
    """Rank of J^n as an abelian group, by lattice computation."""
    g = RC2Element(-1, 1)
    power = RC2Element(1, 0)
    for _ in range(max(n, 0)):
        power = power * g
    lat = IntLattice(2)
    lat.add([power.a, power.b])
    prod = power * RC2Element(0, 1)
    lat.add([prod.a, prod.b])
    return lat.rank()


# --- the k-diamond rewriting system ---------------------------------


def _mono_exp(mono, g):
    return dict(mono).get(g, 0)


def _replace(mono, changes):
    d = dict(mono)
    for g, delta in changes:
        d[g] = d.get(g, 0) + delta
        if d[g] < 0:
            raise SymbolicError("negative exponent in rewrite")
        if not d[g]:
            del d[g]
    return tuple(sorted(d.items()))


def _redexes(mono):
    """Applicable rule names for one monomial, in canonical order."""
    e = _mono_exp(mono, _SIGMA)
    out = []
    if e >= 1 and _mono_exp(mono, _MU) >= 1:
        out.append("sigma-mu")
    if e >= 1 and _mono_exp(mono, _TAU) >= 1:
        out.append("sigma-tau")
    if e >= 2:
        out.append("sigma-square")
    if _mono_exp(mono, _V) >= 1 and _mono_exp(mono, _MU) >= 2:
        out.append("v-mu-square")
    return out


def _apply_rule(mono, coef, rule):
    """One rewrite step on coef * mono; returns a GradedPoly."""
    if rule == "sigma-mu":
        return GradedPoly({_replace(mono, [(_SIGMA, -1)]): -coef})
    if rule == "sigma-tau":
        base = _replace(mono, [(_SIGMA, -1), (_TAU, -1)])
        tau_part = GradedPoly({_replace(base, [(_TAU, 1)]): coef})
        vmu_part = GradedPoly({_replace(base, [(_V, 1), (_MU, 1)]): coef})
        return tau_part + vmu_part
    if rule == "sigma-square":
        return GradedPoly({_replace(mono, [(_SIGMA, -2)]): coef})
    if rule == "v-mu-square":
        base = _replace(mono, [(_V, -1), (_MU, -2)])
        return GradedPoly({_replace(base, [(_TAU, 1), (_MU, 1)]): -2 * coef})
    raise SymbolicError("unknown rule %r" % rule)


def k_diamond_normalize(poly, rule_order=None):
    """Unique normal form under the oriented rules.

    rule_order optionally shuffles which redex fires first; confluence
    means the result does not depend on it.
    """
    work = poly
    while True:
        hit = None
        for mono, coef in sorted(work.terms.items()):
            rules = _redexes(mono)
            if rules:
                if rule_order:
                    rules = [r for r in rule_order if r in rules]
                hit = (mono, coef, rules[0])
                break
        if hit is None:
            return work
        mono, coef, rule = hit
        work = work - GradedPoly({mono: coef}) + _apply_rule(mono, coef, rule)


def is_normal(poly):
    return all(not _redexes(m) for m in poly.terms)


def critical_pair_report(exp_bound=3):
    """Join every monomial carrying two or more redexes.

    Returns (all_join, details); each detail row lists the monomial, the
    rules applied first, and whether all one-step reducts normalize to
    the same element.
    """
    details = []
    ok = True
    for e in range(exp_bound):
        for a in range(exp_bound):
            for b in range(exp_bound):
                for c in range(exp_bound + 1):
                    changes = [(_SIGMA, e), (_V, a), (_TAU, b), (_MU, c)]
                    mono = _replace((), changes)
                    rules = _redexes(mono)
                    if len(rules) < 2:
                        continue
                    forms = [k_diamond_normalize(_apply_rule(mono, 1, r))
                             for r in rules]
                    joins = all(f == forms[0] for f in forms)
                    ok = ok and joins
                    details.append({"monomial": GradedPoly({mono: 1}).render(),
                                    "rules": rules, "joins": joins})
    return ok, details


def k_diamond_rank(k, n):
    """Rank of the normal-form basis in bidegree (2k, -2n)."""
    count = 0
    # sigma * v^a sits in (2a, 0)
    if n == 0 and k >= 0:
        count += 1
    # v^a tau^b mu^c with a + b = k, b + c = n, and a = 0 or c <= 1
    for b in range(0, min(k, n) + 1):
        a, c = k - b, n - b
        if a >= 0 and c >= 0 and (a == 0 or c <= 1):
            count += 1
    return count


def j_filtration_rank(k, n):
    """Same rank from the J-power filtration J^{n-k} v^{-n} picture."""
    if k < 0:
        return 0
    return j_power_rank(max(n - k, 0))


# --- stabilization ---------------------------------------------------


def _reduce_uv(poly):
    """Reduce mod (2u + vu^2): rewrite u^2 v -> -2u."""
    work = poly
    while True:
        hit = None
        for mono, coef in sorted(work.terms.items()):
            d = dict(mono)
            if d.get(_U, 0) >= 2 and d.get(_V, 0) >= 1:
                hit = (mono, coef)
                break
        if hit is None:
            return work
        mono, coef = hit
        repl = GradedPoly({_replace(mono, [(_U, -1), (_V, -1)]): -2 * coef})
        work = work - GradedPoly({mono: coef}) + repl


def k_stabilize(poly):
    """Invert and kill tau: tau -> 1, mu -> u, sigma -> 1 + uv.

    Lands in Z[u, v]/(2u + vu^2), reduced via u^2 v -> -2u.
    """
    image = poly.substitute({
        _TAU: GradedPoly.const(1),
        _MU: GradedPoly.gen("u"),
        _SIGMA: GradedPoly.const(1) + GradedPoly.gen("u") * GradedPoly.gen("v"),
    })
    return _reduce_uv(image)


def hr_diamond_normalize(poly, ring_descriptor="Z"):
    """Normal form in R[mu, tau]/(2 mu) for 2-torsion-free R."""
    if isinstance(ring_descriptor, dict):
        if ring_descriptor.get("two_torsion"):
            raise TwoTorsionCoefficientRing(
                "coefficient ring %r has 2-torsion"
                % ring_descriptor.get("name"))
    elif "/2" in str(ring_descriptor) or "/4" in str(ring_descriptor):
        raise TwoTorsionCoefficientRing(
            "coefficient ring %r has 2-torsion" % ring_descriptor)
    out = {}
    for mono, coef in poly.terms.items():
        bad = [g for (g, _) in mono if g not in (_MU, _TAU)]
        if bad:
            raise SymbolicError("expected a polynomial in mu, tau")
        if _mono_exp(mono, _MU) >= 1:
            coef %= 2
        if coef:
            out[mono] = coef
    return GradedPoly(out)


# --- the Mackey chart -------------------------------------------------


class MackeyLabel:
    """One of: Box, Circle, Power(n), Quotient(m, n) with m < n, Zero."""

    def __init__(self, tag, params=()):
        if tag == "quotient":
            m, n = params
            if not m < n:
                raise SymbolicError("quotient label needs m < n")
        self.tag = tag
        self.params = tuple(params)

    def __eq__(self, other):
        return isinstance(other, MackeyLabel) and \
            (self.tag, self.params) == (other.tag, other.params)

    def __hash__(self):
        return hash((self.tag, self.params))

    def glyph(self):
        if self.tag == "box":
            return "□"
        if self.tag == "circle":
            return "∘"
        if self.tag == "power":
            return str(self.params[0])
        if self.tag == "quotient":
            return "%d/%d" % self.params
        return "."

    def __repr__(self):
        return "MackeyLabel(%r, %r)" % (self.tag, self.params)


def k_chart_cell(x, y):
    """Label of the K-theory chart at (trivial, sign) degree (x, y)."""
    if x % 2:
        if x > 0 or x == -1:
            return MackeyLabel("zero")
        m = (-x - 1) // 2
        n = y // 2 if y % 2 == 0 else (y - 1) // 2
        if 1 <= m < n:
            return MackeyLabel("quotient", (m, n))
        return MackeyLabel("zero")
    k = x // 2
    if k >= 0:
        if y >= 0:
            return MackeyLabel("box") if y % 2 == 0 else MackeyLabel("power", (1,))
        if y % 2 == 0:
            n = -y // 2
            return MackeyLabel("power", (n - k,)) if k < n else MackeyLabel("box")
        n = (-y + 1) // 2
        return MackeyLabel("power", (max(n - k, 1),))
    if y > 0 and y % 2 == 0:
        n, m = y // 2, -k
        if 1 <= m <= n:
            return MackeyLabel("circle")
    return MackeyLabel("zero")


def _parse_range(spec):
    lo, hi = spec.split("..") if isinstance(spec, str) else spec
    return int(lo), int(hi)


def k_chart(t_range, s_range):
    """Grid of labels; odd sign-degree rows are flagged as derived."""
    t_lo, t_hi = _parse_range(t_range)
    s_lo, s_hi = _parse_range(s_range)
    rows = []
    for y in range(s_hi, s_lo - 1, -1):
        cells = [{"x": x, "y": y, "label": k_chart_cell(x, y)}
                 for x in range(t_lo, t_hi + 1)]
        rows.append({"y": y, "derived": y % 2 != 0, "cells": cells})
    return rows


def render_chart(rows, cell_width=5):
    """Fixed-width text grid shared by the K and cobordism charts."""
    lines = []
    xs = [c["x"] for c in rows[0]["cells"]] if rows else []
    for row in rows:
        body = "".join(
            (c["label"].glyph() if hasattr(c["label"], "glyph")
             else str(c["label"])).center(cell_width)
            for c in row["cells"])
        mark = " *" if row.get("derived") else ""
        lines.append("%4d |%s%s" % (row["y"], body, mark))
    lines.append("     +" + "-" * (cell_width * len(xs)))
    lines.append("      " + "".join(str(x).center(cell_width) for x in xs))
    lines.append("      (* = derived row)")
    return "\n".join(lines)


def group_description(free_rank, torsion):
    """Render (rank, elementary divisors) as an abelian group string."""
    parts = []
    if free_rank == 1:
        parts.append("Z")
    elif free_rank > 1:
        parts.append("Z^%d" % free_rank)
    parts.extend("Z/%d" % d for d in torsion)
    return " + ".join(parts) if parts else "0"


def omega_chart(t_range, s_range, degree_bound=12, lattice=None):
    """Grid of cobordism coefficient groups via graded_piece."""
    from .graded import graded_piece, OutOfImplementedRange
    from .fgl import get_service
    from .lattice import build_lattice

    service = get_service()
    lattice = lattice or build_lattice(degree_bound)
    t_lo, t_hi = _parse_range(t_range)
    s_lo, s_hi = _parse_range(s_range)
    rows = []
    for s in range(s_hi, s_lo - 1, -1):
        cells = []
        for t in range(t_lo, t_hi + 1):
            if s % 2 or t % 2:
                label = "."
            else:
                try:
                    piece = graded_piece(t, s, degree_bound=degree_bound,
                                         service=service, lattice=lattice)
                    label = group_description(piece["free_rank"],
                                              piece["torsion"])
                    if piece.get("partial"):
                        label += "?"
                except OutOfImplementedRange:
                    label = "?"
            cells.append({"x": t, "y": s, "label": label})
        rows.append({"y": s, "derived": False, "cells": cells})
    return rows


def stabilize_ring_map_check(trials=200, seed=0):
    """k_stabilize respects products and kills the target relation."""
    rng = random.Random(seed)
    gens = [_SIGMA, _V, _MU, _TAU]

    def random_elem():
        out = GradedPoly.zero()
        for _ in range(rng.randint(1, 3)):
            mono = GradedPoly.const(rng.randint(-3, 3) or 1)
            for _ in range(rng.randint(0, 3)):
                g = gens[rng.randrange(4)]
                mono = mono * GradedPoly({((g, 1),): 1})
            out = out + mono
        return out

    two_u = 2 * GradedPoly.gen("u") + GradedPoly.gen("v") * GradedPoly.gen("u", power=2)
    if not _reduce_uv(two_u).is_zero():
        return False
    for _ in range(trials):
        p, q = random_elem(), random_elem()
        lhs = k_stabilize(p * q)
        rhs = _reduce_uv(k_stabilize(p) * k_stabilize(q))
        if lhs != rhs:
            return False
    return True

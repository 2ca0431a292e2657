"""Twisted projective space classes: images, lifts, and convention audit.

The class attached to the pair (m, n) has an underlying image in Z[b]
(the coefficient of x^{m+n-1} in B(x)^{-(m+n)}) and a fixed-point image
in Z[b, bp][u^{+-1}] given by a symmetric two-term coefficient formula.
A candidate expression in the d_{i,j}, q_j generators is correct exactly
when augmentation and the fixed-point map reproduce this image pair.

The literature leaves four binary choices ambiguous (the coefficient
exponent, the sign of each b-family, and whether the fixed-point map's
correction sum includes negative indices); the audit evaluates all 16
variants and reports which ones validate the stored example classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import GradedPoly, gen, SymbolicError
from .series import TruncSeries
from .fgl import get_service, SIGN_PLUS, SIGN_MINUS
from .lattice import build_lattice, NotInLattice
from .rings import PresentedElement, RING_GEOMETRIC, phi_map, augmentation
from .graded import omega_monomials_upto, _mono_degree
from .hnf import solve_int

_U = gen("u")


class LiftNotFound(SymbolicError):
    pass


@dataclass(frozen=True)
class ConventionVariant:
    exponent_rule: str = "proof"       # 'proof' (x^{k-1}) or 'stated' (x^k)
    b_sign: str = "+"
    bprime_sign: str = "+"
    phi_negative_ell: str = "include"  # or 'exclude'

    def label(self):
        return "%s,b%s,bp%s,%s" % (self.exponent_rule, self.b_sign,
                                   self.bprime_sign, self.phi_negative_ell)


DEFAULT_VARIANT = ConventionVariant()


def all_variants():
    out = []
    for rule in ("proof", "stated"):
        for bs in ("+", "-"):
            for bps in ("+", "-"):
                for neg in ("include", "exclude"):
                    out.append(ConventionVariant(rule, bs, bps, neg))
    return out


def _service_for(variant):
    return get_service(SIGN_MINUS if variant.b_sign == "-" else SIGN_PLUS)


def _unit(cutoff, family, sign):
    coeffs = {(0,): GradedPoly.const(1)}
    for k in range(1, cutoff):
        s = -1 if (sign == "-" and k % 2 == 1) else 1
        coeffs[(k,)] = GradedPoly.gen(family, k, coef=s)
    return TruncSeries(("x",), cutoff, coeffs)


def pi_underlying(m, n, variant=DEFAULT_VARIANT):
    """Coefficient of x^{m+n-1} in B(x)^{-(m+n)}."""
    if m + n < 1:
        raise SymbolicError("requires m + n >= 1")
    return _service_for(variant).mischenko(m + n)


def _half_term(m, n, variant):
    """coeff_{x^{m-1}} (C^{-m} C'^{-n}) u^{-n}, or the x^m variant."""
    e = m - 1 if variant.exponent_rule == "proof" else m
    if e < 0:
        return GradedPoly.zero()
    cutoff = e + 1
    series = (_unit(cutoff, "b", variant.b_sign).invert() ** m) * \
             (_unit(cutoff, "bp", variant.bprime_sign).invert() ** n)
    coef = series.coefficient(e)
    if not coef:
        return GradedPoly.zero()
    return coef * GradedPoly.gen("u", power=-n) if n else coef


def pi_fixed(m, n, variant=DEFAULT_VARIANT):
    """Fixed-point image: the symmetric two-term coefficient formula."""
    if m + n < 1 or m < 0 or n < 0:
        raise SymbolicError("requires m, n >= 0 and m + n >= 1")
    return _half_term(m, n, variant) + _half_term(n, m, variant)


def _flip_bp(poly):
    mapping = {}
    for g in poly.generators():
        if g[0] == "bp" and g[1][0] % 2 == 1:
            mapping[g] = GradedPoly({((g, 1),): -1})
    return poly.substitute(mapping) if mapping else poly


def candidate_images(candidate, variant):
    """(augmentation image, fixed-point image) of an element."""
    service = _service_for(variant)
    poly = candidate.poly if isinstance(candidate, PresentedElement) \
        else candidate
    aug = augmentation(poly, service)
    fixed = phi_map(poly, service,
                    include_negative=variant.phi_negative_ell == "include")
    if variant.bprime_sign == "-":
        fixed = _flip_bp(fixed)
    return aug, fixed


def degree_screen(m, n, variant):
    """True when pi_fixed is homogeneous of the right degree."""
    target = (2 * (m + n - 1), 0)
    fixed = pi_fixed(m, n, variant)
    if fixed.is_zero():
        return True
    try:
        return fixed.degree() == target
    except SymbolicError:
        return False


def pi_verify(m, n, candidate, variant=DEFAULT_VARIANT):
    """Check a candidate against the image pair; returns (ok, report)."""
    aug, fixed = candidate_images(candidate, variant)
    want_aug = pi_underlying(m, n, variant)
    want_fixed = pi_fixed(m, n, variant)
    ok = (aug == want_aug) and (fixed == want_fixed)
    report = {
        "m": m, "n": n, "variant": variant.label(),
        "degree_screen": degree_screen(m, n, variant),
        "underlying": {"candidate": aug.render(),
                       "expected": want_aug.render(),
                       "match": aug == want_aug},
        "fixed": {"candidate": fixed.render(),
                  "expected": want_fixed.render(),
                  "match": fixed == want_fixed},
        "pass": ok,
    }
    return ok, report


def _phi_vector(poly, index):
    """Expand a fixed-point-ring polynomial over the monomial index."""
    vec = [0] * len(index)
    for mono, c in poly.terms.items():
        if mono not in index:
            return None
        vec[index[mono]] = c
    return vec


def pi_lift(m, n, variant=DEFAULT_VARIANT, lattice=None):
    """Solve for an element with the prescribed image pair.

    Finds a q_1-free combination of generator monomials whose fixed-point
    image matches, then corrects the underlying image with a q_1 multiple.
    """
    service = _service_for(variant)
    degree = 2 * (m + n - 1)
    lattice = lattice or build_lattice(max(degree, 0) + 2)
    target = pi_fixed(m, n, variant)

    unknowns = []      # (monomial poly, lattice poly)
    images = []
    for mono in omega_monomials_upto(degree // 2):
        if any(g == gen("q", 1) for g, _ in mono):
            continue
        mpoly = GradedPoly({mono: 1})
        img = phi_map(
            mpoly, service,
            include_negative=variant.phi_negative_ell == "include")
        if variant.bprime_sign == "-":
            img = _flip_bp(img)
        for lam in lattice.degree_lattice(
                degree - _mono_degree(mono)).basis_polys():
            unknowns.append(mpoly * lam)
            images.append(img * lam)
    monos = set(target.terms)
    for img in images:
        monos.update(img.terms)
    index = {mo: k for k, mo in enumerate(sorted(monos))}
    rows = [_phi_vector(img, index) for img in images]
    tvec = _phi_vector(target, index)
    sol = solve_int(rows, tvec)
    if sol is None:
        raise LiftNotFound(
            "no generator combination matches the fixed-point image "
            "at degree %d" % degree)
    tilde = GradedPoly.zero()
    for coef, upoly in zip(sol, unknowns):
        if coef:
            tilde = tilde + coef * upoly
    kappa = pi_underlying(m, n, variant) - augmentation(tilde, service)
    if kappa:
        if not kappa.content_divisible_by(2):
            raise LiftNotFound("underlying correction %s is not divisible "
                               "by 2" % kappa.render())
        gamma = kappa.exact_div(2)
        if not lattice.contains(gamma):
            raise LiftNotFound("underlying correction is not twice a "
                               "coefficient-ring element")
        tilde = tilde + gamma * GradedPoly.gen("q", 1)
    return PresentedElement(tilde, RING_GEOMETRIC)


def reference_examples(variant=DEFAULT_VARIANT):
    """The stored example classes, built under the variant's b-sign."""
    service = _service_for(variant)
    d = GradedPoly.gen
    ex = []
    ex.append(((1, 1), -d("q", 2)))
    ex.append(((2, 1), d("D", 1, 0) - service.a(1, 1) * d("q", 2)))
    gamma = (6 * GradedPoly.gen("b", 1) ** 3
             - 18 * GradedPoly.gen("b", 1) * GradedPoly.gen("b", 2)
             + 6 * GradedPoly.gen("b", 3))
    ex.append(((2, 2),
               4 * d("D", 1, 1) + 2 * d("q", 4)
               - 2 * d("q", 2) * d("q", 3) - d("q", 2) ** 3
               + gamma * d("q", 1)))
    return ex


def convention_audit():
    """Evaluate every stored example under all 16 variants."""
    out = {"examples": [], "variants_passing_all": []}
    passing = {v.label(): True for v in all_variants()}
    for (m, n), _ in reference_examples():
        entry = {"m": m, "n": n, "passing_variants": [], "reports": {}}
        for v in all_variants():
            cand = dict(
                (key, val) for key, val in
                [((mm, nn), cc) for (mm, nn), cc in reference_examples(v)]
            )[(m, n)]
            screen = degree_screen(m, n, v)
            if not screen:
                ok = False
                report = {"m": m, "n": n, "variant": v.label(),
                          "degree_screen": False, "pass": False}
            else:
                ok, report = pi_verify(m, n, cand, v)
            if ok:
                entry["passing_variants"].append(v.label())
            else:
                passing[v.label()] = False
            if v == DEFAULT_VARIANT and not ok:
                entry["reports"][v.label()] = report
        out["examples"].append(entry)
    out["variants_passing_all"] = sorted(
        lbl for lbl, good in passing.items() if good)
    return out

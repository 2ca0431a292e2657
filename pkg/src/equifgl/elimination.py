"""Leading-term elimination over R[u, x_1, ..., x_k].

Given the ideal I = (u x_i + p_i) with u-free p_i, the intersection
I with R[x] equals J = (x_i p_j - x_j p_i).  ``eliminate`` transforms a
given I-combination of a u-free target into an explicit J-certificate by
repeatedly cancelling the leading u-terms.

Monomial order: u-exponent first, then total degree, then exponents of
x_k, ..., x_1 lexicographically.  With u dominating outright, the
leading term of q(u x_i + p_i) is always LT(q) u x_i, which is what the
cancellation step needs; this order also makes the descent strictly
decreasing and hence terminating.

Polynomials are GradedPoly values in the 'x' and 'u' generators with
integer coefficients (R = Z).
"""

from __future__ import annotations

from .poly import GradedPoly, gen, SymbolicError
from .hnf import solve_int

_U = gen("u")


class ZeroPolynomial(SymbolicError):
    pass


class InvalidWitness(SymbolicError):
    pass


class NonTermination(SymbolicError):
    pass


class EliminationProblem:
    """Variables x_1 .. x_k under u, with relations u x_i + p_i."""

    def __init__(self, nvars, relations):
        self.nvars = nvars
        self.p = {}
        for i, p in relations:
            if not (1 <= i <= nvars):
                raise SymbolicError("variable index %d out of range" % i)
            mono_check = p.exponent_range(_U)
            if mono_check != (0, 0):
                raise SymbolicError("p_%d must be u-free" % i)
            self.p[i] = p

    def generator(self, i):
        """The ideal generator u x_i + p_i."""
        return GradedPoly.gen("u") * GradedPoly.gen("x", i) + self.p[i]

    def syzygy(self, i, j):
        """x_i p_j - x_j p_i."""
        return (GradedPoly.gen("x", i) * self.p[j]
                - GradedPoly.gen("x", j) * self.p[i])


def _mono_key(mono, nvars):
    d = dict(mono)
    ue = d.get(_U, 0)
    total = sum(d.values())
    tail = tuple(d.get(gen("x", i), 0) for i in range(nvars, 0, -1))
    return (ue, total) + tail


def leading_term(q, nvars):
    """(coefficient, monomial) of the greatest monomial of q."""
    if q.is_zero():
        raise ZeroPolynomial("leading term of zero")
    best = max(q.terms, key=lambda m: _mono_key(m, nvars))
    return (q.terms[best], best)


def _mono_poly(mono, coef=1):
    return GradedPoly({mono: coef})


def _mono_div(mono, g):
    """mono / g for a single generator g; raises if not divisible."""
    d = dict(mono)
    if d.get(g, 0) < 1:
        raise SymbolicError("monomial not divisible by %s" % (g,))
    d[g] -= 1
    if not d[g]:
        del d[g]
    return tuple(sorted(d.items()))


class Certificate:
    """f = sum of coef * (x_i p_j - x_j p_i)."""

    def __init__(self, target, combination, problem):
        self.target = target
        self.combination = combination
        self.problem = problem
        if self.expand() != target:
            raise InvalidWitness("certificate does not re-expand to target")

    def expand(self):
        out = GradedPoly.zero()
        for coef, (i, j) in self.combination:
            out = out + coef * self.problem.syzygy(i, j)
        return out

    def to_obj(self):
        return {
            "target": self.target.to_obj(),
            "combination": [
                {"coef": c.to_obj(), "pair": [i, j]}
                for c, (i, j) in self.combination
            ],
        }


def eliminate(f, prob, witness, max_steps=100000):
    """Turn an I-combination witness for u-free f into a J-certificate.

    ``witness`` is a list of (q_i, i) with f = sum q_i (u x_i + p_i).
    """
    if f.exponent_range(_U) != (0, 0):
        raise InvalidWitness("target must be u-free")
    work = {}
    for q, i in witness:
        work[i] = work.get(i, GradedPoly.zero()) + q
    total = GradedPoly.zero()
    for i, q in work.items():
        total = total + q * prob.generator(i)
    if total != f:
        raise InvalidWitness("witness does not re-expand to target")

    cert = []
    for step in range(max_steps):
        live = [(i, q) for i, q in work.items() if q]
        if not live:
            break
        # find the maximal leading u-monomial among the q_i (u x_i + p_i)
        headed = []
        ux = {}
        for i, q in live:
            c, m = leading_term(q, prob.nvars)
            full = dict(m)
            full[_U] = full.get(_U, 0) + 1
            xi = gen("x", i)
            full[xi] = full.get(xi, 0) + 1
            key = _mono_key(tuple(sorted(full.items())), prob.nvars)
            headed.append((key, i, c, m))
        top = max(h[0] for h in headed)
        group = [h for h in headed if h[0] == top]
        if len(group) < 2:
            raise NonTermination(
                "leading u-term cannot cancel; witness inconsistent")
        # telescoping rewrite of the grouped leading terms
        partial = 0
        for t in range(len(group) - 1):
            _, i_t, c_t, m_t = group[t]
            _, i_n, _, _ = group[t + 1]
            partial += c_t
            if partial:
                ratio = _mono_div(m_t, gen("x", i_n))
                cert.append((_mono_poly(ratio, -partial), (i_t, i_n)))
        for _, i, c, m in group:
            work[i] = work[i] - _mono_poly(m, c)
    else:
        raise NonTermination("step bound exceeded")

    # the certificate coefficients may carry u-components that cancel in
    # total; both f and the syzygies are u-free, so the identity splits by
    # u-degree and only the u-free layer is kept
    clean = []
    for coef, pair in cert:
        c0 = coef.coefficient_of(_U, 0)
        if c0:
            clean.append((c0, pair))
    return Certificate(f, _merge(clean), prob)


def _merge(combination):
    acc = {}
    for coef, pair in combination:
        acc[pair] = acc.get(pair, GradedPoly.zero()) + coef
    return [(c, pair) for pair, c in sorted(acc.items()) if c]


def _monomials_upto(nvars, bound, with_u=True):
    gens = [gen("x", i) for i in range(1, nvars + 1)]
    if with_u:
        gens.append(_U)
    out = [()]
    for g in gens:
        new = []
        for m in out:
            d = dict(m)
            deg = sum(d.values())
            for e in range(0, bound - deg + 1):
                if e:
                    d2 = dict(d)
                    d2[g] = e
                    new.append(tuple(sorted(d2.items())))
                else:
                    new.append(m)
        out = new
    return out


def brute_force_member(f, prob, bound):
    """Degree-bounded ideal membership by integer linear algebra.

    Decides whether f is an integer combination of monomial multiples
    (of total degree <= bound) of the generators u x_i + p_i.
    """
    rows_polys = []
    for i in prob.p:
        g = prob.generator(i)
        for m in _monomials_upto(prob.nvars, bound):
            rows_polys.append(_mono_poly(m) * g)
    monos = set(f.terms)
    for p in rows_polys:
        monos.update(p.terms)
    index = {m: k for k, m in enumerate(sorted(monos))}
    rows = []
    for p in rows_polys:
        vec = [0] * len(index)
        for m, c in p.terms.items():
            vec[index[m]] = c
        rows.append(vec)
    target = [0] * len(index)
    for m, c in f.terms.items():
        target[index[m]] = c
    return solve_int(rows, target) is not None


def submodule_presentation(prob, n):
    """Relations presenting R[x]{1, ..., u^n} inside R[u,x]/I."""
    rows = []
    idx = sorted(prob.p)
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            rows.append(("syzygy", (idx[a], idx[b]),
                         prob.syzygy(idx[a], idx[b])))
    for k in range(n):
        for i in idx:
            rel = (GradedPoly.gen("u", power=k + 1) * GradedPoly.gen("x", i)
                   + GradedPoly.gen("u", power=k) * prob.p[i]
                   if k else
                   GradedPoly.gen("u") * GradedPoly.gen("x", i) + prob.p[i])
            rows.append(("u-relation", (k, i), rel))
    return rows

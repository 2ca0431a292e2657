"""Truncated multivariate power series over GradedPoly coefficients.

A series keeps coefficients for exponent tuples of total degree < cutoff.
Formal series variables are plain names ('x', 'y', ...) kept separate from
the polynomial generator alphabet.
"""

from __future__ import annotations

from .poly import GradedPoly, SymbolicError


class SeriesError(SymbolicError):
    pass


class NotInvertible(SeriesError):
    pass


class TruncSeries:
    __slots__ = ("vars", "cutoff", "coeffs")

    def __init__(self, vars, cutoff, coeffs=None):
        self.vars = tuple(vars)
        self.cutoff = cutoff
        self.coeffs = {}
        if coeffs:
            for e, p in coeffs.items():
                if sum(e) < cutoff and p:
                    self.coeffs[tuple(e)] = p

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, vars, cutoff):
        return cls(vars, cutoff)

    @classmethod
    def const(cls, vars, cutoff, poly):
        if isinstance(poly, int):
            poly = GradedPoly.const(poly)
        z = (0,) * len(vars)
        return cls(vars, cutoff, {z: poly})

    @classmethod
    def var(cls, vars, cutoff, name, coef=1):
        e = tuple(1 if v == name else 0 for v in vars)
        if name not in vars:
            raise SeriesError("unknown variable %r" % name)
        return cls(vars, cutoff, {e: GradedPoly.const(coef)})

    def _check(self, other):
        if self.vars != other.vars:
            raise SeriesError("variable mismatch")
        return min(self.cutoff, other.cutoff)

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        cutoff = self._check(other)
        out = {}
        for e in set(self.coeffs) | set(other.coeffs):
            p = self.coeffs.get(e, GradedPoly.zero()) + other.coeffs.get(e, GradedPoly.zero())
            if p:
                out[e] = p
        return TruncSeries(self.vars, cutoff, out)

    def __neg__(self):
        return TruncSeries(self.vars, self.cutoff,
                           {e: -p for e, p in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        cutoff = self._check(other)
        out = {}
        for e1, p1 in self.coeffs.items():
            d1 = sum(e1)
            for e2, p2 in other.coeffs.items():
                if d1 + sum(e2) >= cutoff:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                p = p1 * p2
                if e in out:
                    out[e] = out[e] + p
                else:
                    out[e] = p
        return TruncSeries(self.vars, cutoff, {e: p for e, p in out.items() if p})

    def scale(self, poly):
        if isinstance(poly, int):
            poly = GradedPoly.const(poly)
        return TruncSeries(self.vars, self.cutoff,
                           {e: p * poly for e, p in self.coeffs.items()})

    def __pow__(self, n):
        out = TruncSeries.const(self.vars, self.cutoff, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and self.vars == other.vars
                and self.coeffs == other.coeffs)

    def is_zero(self):
        return not self.coeffs

    # access --------------------------------------------------------------
    def coefficient(self, *exps):
        return self.coeffs.get(tuple(exps), GradedPoly.zero())

    def constant_term(self):
        return self.coefficient(*([0] * len(self.vars)))

    def valuation(self):
        if not self.coeffs:
            return None
        return min(sum(e) for e in self.coeffs)

    def map_coeffs(self, fn):
        out = {}
        for e, p in self.coeffs.items():
            q = fn(p)
            if q:
                out[e] = q
        return TruncSeries(self.vars, self.cutoff, out)

    # composition -----------------------------------------------------------
    def substitute(self, mapping):
        """Substitute series for variables.

        ``mapping`` maps variable names to TruncSeries over a common variable
        set; every substituted series must have zero constant term.  Unmapped
        variables must not occur.
        """
        target = None
        for s in mapping.values():
            if target is None:
                target = (s.vars, s.cutoff)
            elif target[0] != s.vars:
                raise SeriesError("substitution variable mismatch")
        if target is None:
            raise SeriesError("empty substitution")
        tvars, cutoff = target
        cutoff = min(cutoff, self.cutoff)
        for v, s in mapping.items():
            if s.constant_term():
                raise SeriesError("substituted series for %r has constant term" % v)
        out = TruncSeries.zero(tvars, cutoff)
        powers = {v: [TruncSeries.const(tvars, cutoff, 1)] for v in self.vars}
        for e, p in sorted(self.coeffs.items()):
            acc = TruncSeries.const(tvars, cutoff, p)
            for v, k in zip(self.vars, e):
                if k == 0:
                    continue
                if v not in mapping:
                    raise SeriesError("no substitution for variable %r" % v)
                plist = powers[v]
                while len(plist) <= k:
                    plist.append(plist[-1] * mapping[v])
                acc = acc * plist[k]
            out = out + acc
        return out

    def compose(self, inner):
        """1-variable composition self(inner(x))."""
        if len(self.vars) != 1:
            raise SeriesError("compose requires a 1-variable outer series")
        return self.substitute({self.vars[0]: inner})

    # inversion -------------------------------------------------------------
    def invert(self):
        """Multiplicative inverse; constant term must be +-1 or +-u^k."""
        c0 = self.constant_term()
        if len(c0.terms) != 1:
            raise NotInvertible("constant term is not a monomial unit")
        (mono, coef), = c0.terms.items()
        if coef not in (1, -1) or any(g[0] != "u" for g, _ in mono):
            raise NotInvertible("constant term %s is not invertible" % c0.render())
        inv_mono = tuple((g, -e) for g, e in mono)
        c0inv = GradedPoly({inv_mono: coef})
        # self = c0 (1 + r), inverse = c0inv sum (-r)^k
        r = self.scale(c0inv) - TruncSeries.const(self.vars, self.cutoff, 1)
        out = TruncSeries.const(self.vars, self.cutoff, 1)
        term = TruncSeries.const(self.vars, self.cutoff, 1)
        for _ in range(self.cutoff):
            term = -(term * r)
            if term.is_zero():
                break
            out = out + term
        return out.scale(c0inv)

    def revert(self):
        """Compositional inverse of a 1-variable series x + O(x^2)."""
        if len(self.vars) != 1:
            raise SeriesError("revert requires one variable")
        x = TruncSeries.var(self.vars, self.cutoff, self.vars[0])
        lead = self.coefficient(1)
        if lead != GradedPoly.const(1) or self.constant_term():
            raise NotInvertible("series must start with x")
        tail = self - x
        g = x
        for _ in range(self.cutoff):
            g2 = x - tail.substitute({self.vars[0]: g})
            if g2 == g:
                break
            g = g2
        return g

"""Sparse graded polynomials with exact integer coefficients.

Generators are tagged by a family name and an index tuple, e.g. ``('b', (1,))``
for b1 or ``('D', (1, 0))`` for the two-index ring generator d_1_0.  Every
generator carries a bidegree (t, s) meaning t + s*alpha in the sign-twisted
grading group; only the family ``u`` is allowed negative exponents.
"""

from __future__ import annotations

import json


class SymbolicError(Exception):
    pass


class NonHomogeneous(SymbolicError):
    pass


class InvalidExponent(SymbolicError):
    pass


class ParseError(SymbolicError):
    pass


# families that take (no index, one index, two indices)
_FAMILIES_0 = ("u", "mu", "tau", "v", "sigma")
_FAMILIES_1 = ("b", "bp", "p", "q", "d", "x")
_FAMILIES_2 = ("a", "c", "D", "pi")

# only these may carry negative exponents
_LAURENT_FAMILIES = ("u",)


def gen(family, *indices):
    if family in _FAMILIES_0:
        if indices:
            raise InvalidExponent("family %r takes no indices" % family)
    elif family in _FAMILIES_1:
        if len(indices) != 1:
            raise InvalidExponent("family %r takes one index" % family)
    elif family in _FAMILIES_2:
        if len(indices) != 2:
            raise InvalidExponent("family %r takes two indices" % family)
    else:
        raise InvalidExponent("unknown generator family %r" % family)
    return (family, tuple(indices))


def gen_degree(g):
    """Bidegree (t, s) of a generator."""
    family, idx = g
    if family == "b" or family == "bp":
        return (2 * idx[0], 0)
    if family == "u":
        return (-2, 0)
    if family == "a":
        return (2 * (idx[0] + idx[1] - 1), 0)
    if family == "c" or family == "D":
        return (2 * (idx[0] + idx[1] + 1), 0)
    if family == "p" or family == "q":
        return (2 * idx[0] - 2, 0)
    if family == "d":
        return (2 * (idx[0] + 1), 0)
    if family == "mu":
        return (0, -2)
    if family == "tau":
        return (2, -2)
    if family == "v":
        return (2, 0)
    if family == "sigma":
        return (0, 0)
    if family == "pi":
        return (2 * (idx[0] + idx[1] - 1), 0)
    if family == "x":
        return (-2, 0)
    raise InvalidExponent("unknown generator %r" % (g,))


def gen_name(g):
    family, idx = g
    if family in _FAMILIES_0:
        return family
    if family in ("b", "bp", "x"):
        return "%s%d" % (family, idx[0])
    if family == "D":
        return "d_%d_%d" % idx
    if len(idx) == 1:
        return "%s_%d" % (family, idx[0])
    return "%s_%d_%d" % (family, idx[0], idx[1])


def parse_gen(name):
    if name in _FAMILIES_0:
        return gen(name)
    for fam in ("bp", "b", "x"):
        if name.startswith(fam) and name[len(fam):].lstrip("-").isdigit():
            return gen(fam, int(name[len(fam):]))
    parts = name.split("_")
    fam = parts[0]
    try:
        idx = tuple(int(t) for t in parts[1:])
    except ValueError:
        raise ParseError("bad generator name %r" % name)
    if fam == "d":
        if len(idx) == 1:
            return gen("d", *idx)
        if len(idx) == 2:
            return gen("D", *idx)
    if fam in _FAMILIES_1 and len(idx) == 1:
        return gen(fam, *idx)
    if fam in _FAMILIES_2 and len(idx) == 2:
        return gen(fam, *idx)
    raise ParseError("bad generator name %r" % name)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for g, e in m2:
        ne = d.get(g, 0) + e
        if ne:
            d[g] = ne
        else:
            del d[g]
    return tuple(sorted(d.items()))


def mono_degree(mono):
    t = s = 0
    for g, e in mono:
        dt, ds = gen_degree(g)
        t += dt * e
        s += ds * e
    return (t, s)


class GradedPoly:
    """Polynomial in tagged generators with int coefficients.

    ``terms`` maps a monomial (sorted tuple of (generator, exponent) pairs
    with nonzero exponents) to a nonzero integer.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    # construction -----------------------------------------------------
    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def const(cls, n):
        return cls({(): int(n)} if n else {})

    @classmethod
    def gen(cls, family, *indices, power=1, coef=1):
        g = gen(family, *indices)
        if power < 0 and family not in _LAURENT_FAMILIES:
            raise InvalidExponent("negative power of %s" % gen_name(g))
        if power == 0 or coef == 0:
            return cls.const(coef)
        return cls({((g, power),): coef})

    # predicates -------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = GradedPoly.const(other)
        return isinstance(other, GradedPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = GradedPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return GradedPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = GradedPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return GradedPoly.zero()
            return GradedPoly({m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                nc = out.get(m, 0) + c1 * c2
                if nc:
                    out[m] = nc
                else:
                    del out[m]
        return GradedPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise InvalidExponent("negative polynomial power")
        out = GradedPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # grading ----------------------------------------------------------
    def is_homogeneous(self):
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self):
        """Bidegree of a homogeneous polynomial; None for zero."""
        degs = {mono_degree(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise NonHomogeneous("mixed degrees %s" % sorted(degs))
        return degs.pop()

    # structure --------------------------------------------------------
    def exponent_range(self, g):
        """(min, max) exponent of generator g over all terms (0 if absent)."""
        lo = hi = 0
        for m in self.terms:
            e = dict(m).get(g, 0)
            lo = min(lo, e)
            hi = max(hi, e)
        return lo, hi

    def coefficient_of(self, g, k):
        """Collect terms with generator g to exponent exactly k; g removed."""
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            if d.get(g, 0) == k:
                d.pop(g, None)
                out[tuple(sorted(d.items()))] = c
        return GradedPoly(out)

    def split_by(self, g):
        """dict exponent -> GradedPoly (with g removed)."""
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.pop(g, 0)
            part = out.setdefault(e, {})
            part[tuple(sorted(d.items()))] = c
        return {e: GradedPoly(p) for e, p in out.items()}

    def clamp(self, g, lo, hi):
        """Drop terms whose exponent of g lies outside [lo, hi]."""
        out = {}
        for m, c in self.terms.items():
            e = dict(m).get(g, 0)
            if lo <= e <= hi:
                out[m] = c
        return GradedPoly(out)

    def substitute(self, mapping):
        """Replace generators per ``mapping`` (generator -> GradedPoly)."""
        out = GradedPoly.zero()
        cache = {}
        for m, c in self.terms.items():
            acc = GradedPoly.const(c)
            for g, e in m:
                if g in mapping:
                    key = (g, e)
                    if key not in cache:
                        rep = mapping[g]
                        if e < 0:
                            raise InvalidExponent(
                                "cannot substitute into negative power of %s"
                                % gen_name(g))
                        cache[key] = rep ** e
                    acc = acc * cache[key]
                else:
                    acc = acc * GradedPoly({((g, e),): 1})
            out = out + acc
        return out

    def generators(self):
        gs = set()
        for m in self.terms:
            for g, _ in m:
                gs.add(g)
        return gs

    def content_divisible_by(self, n):
        return all(c % n == 0 for c in self.terms.values())

    def exact_div(self, n):
        if any(c % n for c in self.terms.values()):
            raise SymbolicError("coefficients not divisible by %d" % n)
        return GradedPoly({m: c // n for m, c in self.terms.items()})

    # rendering and serialization ---------------------------------------
    def render(self):
        if not self.terms:
            return "0"
        bits = []
        for m, c in sorted(self.terms.items()):
            factors = []
            for g, e in m:
                factors.append(gen_name(g) if e == 1 else "%s^%d" % (gen_name(g), e))
            if not factors:
                bits.append(str(c))
            elif c == 1:
                bits.append("*".join(factors))
            elif c == -1:
                bits.append("-" + "*".join(factors))
            else:
                bits.append("%d*%s" % (c, "*".join(factors)))
        s = bits[0]
        for b in bits[1:]:
            s += " - " + b[1:] if b.startswith("-") else " + " + b
        return s

    def __repr__(self):
        return "GradedPoly(%s)" % self.render()

    def to_obj(self):
        terms = []
        for m, c in sorted(self.terms.items()):
            terms.append({"mono": {gen_name(g): e for g, e in m}, "coef": str(c)})
        return {"terms": terms}

    def to_json(self):
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_obj(cls, obj):
        out = {}
        for t in obj["terms"]:
            mono = tuple(sorted((parse_gen(k), int(e)) for k, e in t["mono"].items()
                                if int(e) != 0))
            for g, e in mono:
                if e < 0 and g[0] not in _LAURENT_FAMILIES:
                    raise InvalidExponent("negative power of %s" % gen_name(g))
            c = int(t["coef"])
            if c:
                out[mono] = out.get(mono, 0) + c
        return cls({m: c for m, c in out.items() if c})

    @classmethod
    def from_json(cls, text):
        return cls.from_obj(json.loads(text))


ONE = GradedPoly.const(1)
U = GradedPoly.gen("u")
UINV = GradedPoly.gen("u", power=-1)

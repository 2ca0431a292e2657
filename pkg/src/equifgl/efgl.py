"""Finite-truncation models of C2-equivariant formal group data.

A complete flag is an infinite sequence of irreducible representations
rho_1, rho_2, ... over {1, sigma} containing each infinitely often.  The
divided-power object D has, for each flag, a basis of classes
beta(rho_a, ..., rho_b), stored here as intervals (a, b).  The coproduct
splits an interval at every midpoint, the counit detects length-one
intervals, and capping with x^{rho_a} strips the first representation.

The Pi-classes expand in the beta basis through a unit lower-triangular
matrix whose entries are the suffix values pi_{rho_i + ... + rho_n}; by
default these are symbolic generators (with pi of a single irreducible
set to 1), so every identity checked below is generic.

Cartier duality sends the coalgebra to the dual algebra of interval
concatenation and back; on structure constants the double dual is the
identity, which is checked table against table.
"""

from __future__ import annotations

from .poly import GradedPoly, gen, SymbolicError

_U = gen("u")


class TruncationLoss(SymbolicError):
    pass


class MissingPiValue(SymbolicError):
    pass


_NAMED_TAILS = {
    "alternating": "1s",
    "all-ones-then": "1s",
    "all-sigma-then": "s1",
}


class Flag:
    """Prefix plus a periodic tail rule over the alphabet {'1', 's'}."""

    def __init__(self, prefix, tail_rule="alternating"):
        prefix = tuple(prefix)
        if any(r not in ("1", "s") for r in prefix):
            raise SymbolicError("flag entries must be '1' or 's'")
        pattern = _NAMED_TAILS.get(tail_rule)
        if pattern is None:
            if not tail_rule.startswith("periodic:"):
                raise SymbolicError("unknown tail rule %r" % tail_rule)
            pattern = tail_rule.split(":", 1)[1]
        if "1" not in pattern or "s" not in pattern:
            raise SymbolicError(
                "tail pattern must contain both '1' and 's' so each "
                "occurs infinitely often")
        self.prefix = prefix
        self.pattern = pattern

    def rho(self, i):
        """The i-th representation, 1-indexed."""
        if i < 1:
            raise SymbolicError("flag index must be >= 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.pattern[(i - len(self.prefix) - 1) % len(self.pattern)]

    def suffix_sum(self, a, b):
        """(# trivial, # sign) among rho_a .. rho_b; empty when a > b."""
        ones = sigmas = 0
        for i in range(a, b + 1):
            if self.rho(i) == "1":
                ones += 1
            else:
                sigmas += 1
        return (ones, sigmas)

    def ell(self, i):
        """Count of sigma in rho_1 + ... + rho_{i-1} - rho_i."""
        return self.suffix_sum(1, i - 1)[1] - (1 if self.rho(i) == "s" else 0)


def pi_symbol(v):
    """Symbolic pi_{a + b sigma}; a single irreducible is the unit."""
    a, b = v
    if a < 0 or b < 0:
        raise SymbolicError("representation must be effective")
    if a + b == 0:
        # the projective space of the zero representation is empty
        return GradedPoly.zero()
    if a + b == 1:
        return GradedPoly.const(1)
    return GradedPoly.gen("pi", a, b)


class DModel:
    """Truncated beta-basis model over a coefficient ring A.

    pi_values maps (a, b) for V = a + b sigma to A; when omitted the
    values are the symbolic generators from pi_symbol.
    """

    def __init__(self, flag, truncation, pi_values=None):
        self.flag = flag
        self.truncation = truncation
        self.pi_values = pi_values

    def pi(self, v):
        if self.pi_values is None:
            return pi_symbol(v)
        a, b = v
        if a + b <= 1:
            return pi_symbol(v)
        if v not in self.pi_values:
            raise MissingPiValue("no value for pi_(%d+%ds)" % v)
        val = self.pi_values[v]
        return val if isinstance(val, GradedPoly) else GradedPoly.const(val)

    def check_interval(self, a, b):
        if not (1 <= a <= b <= self.truncation):
            raise TruncationLoss("interval (%d, %d) outside truncation %d"
                                 % (a, b, self.truncation))


def _coerce(c):
    return c if isinstance(c, GradedPoly) else GradedPoly.const(c)


def beta_coproduct(model, i):
    """Delta beta(rho_1..rho_i) = sum_j beta[1..j] (x) beta[j..i]."""
    model.check_interval(1, i)
    return [(j, ((1, j), (j, i))) for j in range(1, i + 1)]


def interval_coproduct(a, b):
    """The same splitting rule for a general interval."""
    return [((a, j), (j, b)) for j in range(a, b + 1)]


def counit(d):
    """epsilon: picks out the length-one interval coordinates."""
    out = GradedPoly.zero()
    for (a, b), c in d.items():
        if a == b:
            out = out + _coerce(c)
    return out


def cap_x(model, d):
    """Cap with x^{rho_a} on each interval: beta[a..b] -> beta[a+1..b].

    Length-one intervals are killed; the result lives in the shifted
    bases beta(rho_{a+1}, ..., rho_b).
    """
    out = {}
    for (a, b), c in d.items():
        model.check_interval(a, b)
        if a == b:
            continue
        key = (a + 1, b)
        out[key] = out.get(key, GradedPoly.zero()) + _coerce(c)
    return {k: v for k, v in out.items() if v}


def x_pairing(model, i, j):
    """<beta[1..i], x^{rho_1 + ... + rho_{j-1}}> via iterated caps."""
    model.check_interval(1, i)
    model.check_interval(1, j)
    d = {(1, i): GradedPoly.const(1)}
    for _ in range(j - 1):
        d = cap_x(model, d)
    return counit(d)


def pair_vector(model, d, j):
    """<d, x^{rho_1 + ... + rho_{j-1}}> for a D-vector d."""
    for _ in range(j - 1):
        d = cap_x(model, d)
    return counit(d)


def pi_to_beta(model, n):
    """Matrix of Pi_{rho_1+...+rho_r} = sum_i pi_{rho_i+...+rho_r} beta[1..i].

    Row r, column i holds pi of the suffix rho_i..rho_r; the diagonal is
    pi of a single irreducible, which is 1.
    """
    model.check_interval(1, n)
    rows = []
    for r in range(1, n + 1):
        rows.append([model.pi(model.flag.suffix_sum(i, r)) if i <= r
                     else GradedPoly.zero() for i in range(1, n + 1)])
    return rows


def unitriangular_inverse(matrix):
    """Exact inverse of a unit lower-triangular matrix over A."""
    n = len(matrix)
    inv = [[GradedPoly.const(1) if i == j else GradedPoly.zero()
            for j in range(n)] for i in range(n)]
    for r in range(n):
        for c in range(r):
            acc = GradedPoly.zero()
            for k in range(c, r):
                acc = acc + matrix[r][k] * inv[k][c]
            inv[r][c] = -acc
    return inv


def matrix_mul(a, b):
    n = len(a)
    out = [[GradedPoly.zero() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = GradedPoly.zero()
            for k in range(n):
                acc = acc + a[i][k] * b[k][j]
            out[i][j] = acc
    return out


def pairing_relation_check(model, n, j):
    """<Pi_{rho_1+...+rho_n}, x^{rho_1+...+rho_{j-1}}> = pi of the suffix."""
    if not (1 <= j <= n + 1):
        raise SymbolicError("split point out of range")
    d = {}
    for i in range(1, n + 1):
        d[(1, i)] = model.pi(model.flag.suffix_sum(i, n))
    got = pair_vector(model, d, j)
    want = model.pi(model.flag.suffix_sum(j, n))
    return got == want


def coproduct_table(n):
    """Structure constants of Delta on intervals inside [1, n]."""
    table = {}
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            table[(a, b)] = interval_coproduct(a, b)
    return table


def cartier_dual(model):
    """Dual algebra: x-duals multiply by interval concatenation.

    The dual basis element of beta[a..b] is written as the same interval;
    the product table is the transpose of the coproduct table.
    """
    n = model.truncation
    mult = {}
    for (a, b), pairs in coproduct_table(n).items():
        for left, right in pairs:
            mult[(left, right)] = (a, b)
    return {"truncation": n, "mult": mult}


def cartier_double_dual(rmodel):
    """Transpose the product table back into a coproduct table."""
    table = {}
    for (left, right), target in rmodel["mult"].items():
        table.setdefault(target, []).append((left, right))
    for target in table:
        table[target].sort()
    return table


def cartier_roundtrip_ok(model):
    return cartier_double_dual(cartier_dual(model)) == \
        coproduct_table(model.truncation)


class FilteredData:
    """Finite witness for a filtration of (A, D).

    a_gens[k] lists F_0A-module generators of F_kA; base_image lists
    sample images of the equivariant coefficient ring in A; d_coords
    lists pairs (n, {i: a_i}) claimed to lie in F_nD.  level_fn reads the
    intrinsic filtration level of an A-element (for the Rees model this
    is the top u-exponent).
    """

    def __init__(self, a_gens, base_image, d_coords, level_fn):
        self.a_gens = a_gens
        self.base_image = base_image
        self.d_coords = d_coords
        self.level_fn = level_fn


def u_level(poly):
    """Top u-exponent: the filtration level in the Rees algebra."""
    if poly.is_zero():
        return 0
    return max(0, poly.exponent_range(_U)[1])


def rees_filtered_data(levels, d_coords=()):
    """The Rees-algebra instance: F_kA is spanned by 1, u, ..., u^k."""
    a_gens = []
    for k in range(levels + 1):
        a_gens.append([GradedPoly.gen("u", power=j) if j else
                       GradedPoly.const(1) for j in range(k + 1)])
    base = [GradedPoly.const(1), GradedPoly.gen("b", 1),
            GradedPoly.gen("q", 2)]
    return FilteredData(a_gens, base, list(d_coords), u_level)


def filtered_check(data, model):
    """The three filtration axioms; returns (ok, violations)."""
    bad = []
    for elem in data.base_image:
        if data.level_fn(elem) > 0:
            bad.append(("axiom1", elem.render()))
    for k, gens in enumerate(data.a_gens):
        for g in gens:
            if data.level_fn(g) > k:
                bad.append(("axiom2-level", k, g.render()))
        if k and not any(g == GradedPoly.gen("u", power=k) for g in gens):
            bad.append(("axiom2-missing-u", k))
    for n, coords in data.d_coords:
        for i, a_i in coords.items():
            bound = n + model.flag.ell(i)
            if data.level_fn(a_i) > bound:
                bad.append(("axiom3", n, i, a_i.render()))
    return (not bad, bad)


def universality_check(data):
    """F_nA = F_0A . {1, ..., u^n}, by double inclusion of generators."""
    base = data.a_gens[0] if data.a_gens else []
    for n, gens in enumerate(data.a_gens):
        span = []
        for j in range(n + 1):
            uj = GradedPoly.gen("u", power=j) if j else GradedPoly.const(1)
            span.extend(uj * g for g in base)
        for g in gens:
            if g not in span:
                return False
        for s in span:
            if s not in gens:
                return False
    return True

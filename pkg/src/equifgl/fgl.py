"""The universal one-dimensional formal group law over Z[b1, b2, ...].

The coefficient ring of complex bordism is modeled exactly through its
embedding into Z[b]: the group law is F(y, z) = B(Binv(y) + Binv(z)) where
B(x) = x + b1 x^2 + b2 x^3 + ... is the universal exponential.  All named
coefficient families are derived from B:

  a_{i,j}  coefficient of y^i z^j in F(y, z)
  p_j      coefficient of x^j in the doubling series F(x, x)
  m_k      coefficient of x^{k+1} in the compositional inverse of B
  c_{i,j}  coefficient of u^j x^i in 1/F(u, x), a Laurent series in u
  d_i      coefficient of x^i in the inverse of u + u*bp1 x + u*bp2 x^2 + ...

The ``minus`` sign convention replaces B(x) by -B(-x), i.e. b_i by (-1)^i b_i.
"""

from __future__ import annotations

from .poly import GradedPoly, gen, SymbolicError
from .series import TruncSeries

SIGN_PLUS = "plus"
SIGN_MINUS = "minus"

_U = gen("u")


def _binom(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


class CoefficientService:
    """Lazy exact tables of FGL coefficients for one sign convention."""

    def __init__(self, sign=SIGN_PLUS):
        if sign not in (SIGN_PLUS, SIGN_MINUS):
            raise SymbolicError("unknown sign convention %r" % sign)
        self.sign = sign
        self._a = {}
        self._a_range = (0, 0)
        self._p = {}
        self._m = {}
        self._c = {}
        self._d = {}

    # basic series -------------------------------------------------------
    def b_coef(self, i, family="b"):
        """b_i (or bp_i) with the sign convention applied; b_0 = 1."""
        if i == 0:
            return GradedPoly.const(1)
        sgn = -1 if (self.sign == SIGN_MINUS and i % 2 == 1) else 1
        return GradedPoly.gen(family, i, coef=sgn)

    def exp_series(self, cutoff):
        """B(x) = x + b1 x^2 + ... truncated below x^cutoff."""
        coeffs = {(k + 1,): self.b_coef(k) for k in range(cutoff - 1)}
        return TruncSeries(("x",), cutoff, coeffs)

    def unit_series(self, cutoff, family="b"):
        """1 + b1 x + b2 x^2 + ... (the exponential divided by x)."""
        coeffs = {(k,): self.b_coef(k, family) for k in range(cutoff)}
        return TruncSeries(("x",), cutoff, coeffs)

    def log_series(self, cutoff):
        return self.exp_series(cutoff).revert()

    def m(self, k):
        """Logarithm coefficient m_k (m_0 = 1)."""
        if k not in self._m:
            log = self.log_series(k + 2)
            for j in range(k + 1):
                self._m.setdefault(j, log.coefficient(j + 1))
        return self._m[k]

    # group law coefficients ----------------------------------------------
    def _extend_a(self, i_max, j_max):
        have_i, have_j = self._a_range
        if i_max < have_i and j_max < have_j:
            return
        i_max = max(i_max, have_i)
        j_max = max(j_max, have_j)
        # F(y, z) = sum_k Bk(Binv(z)) * Binv(y)^k where Bk is the k-th
        # divided derivative of B; only k <= i_max matters for y^i.
        cy = i_max + 2
        cz = j_max + 2
        binv_y = self.log_series(cy)
        binv_z = self.log_series(cz)
        ypow = TruncSeries.const(("x",), cy, 1)
        table = {}
        for k in range(i_max + 1):
            if k > 0:
                ypow = ypow * binv_y
            # Bk(x) = sum_m C(m+1, k) b_m x^{m+1-k}
            bk = TruncSeries(("x",), cz, {
                (m + 1 - k,): self.b_coef(m) * _binom(m + 1, k)
                for m in range(max(k - 1, 0), cz + k - 1)
                if 0 <= m + 1 - k < cz
            })
            zk = bk.substitute({"x": binv_z}) if k > 0 else bk.compose(binv_z)
            for i in range(i_max + 1):
                yc = ypow.coefficient(i)
                if not yc:
                    continue
                for j in range(j_max + 1):
                    zc = zk.coefficient(j)
                    if not zc:
                        continue
                    key = (i, j)
                    table[key] = table.get(key, GradedPoly.zero()) + yc * zc
        for i in range(i_max + 1):
            for j in range(j_max + 1):
                self._a[(i, j)] = table.get((i, j), GradedPoly.zero())
        self._a_range = (i_max, j_max)

    def a(self, i, j):
        """Group law coefficient a_{i,j} as a polynomial in the b's."""
        if i < 0 or j < 0:
            return GradedPoly.zero()
        if (i, j) not in self._a or (i > self._a_range[0] or j > self._a_range[1]):
            self._extend_a(max(i, self._a_range[0]), max(j, self._a_range[1]))
        return self._a[(i, j)]

    def p(self, j):
        """Doubling series coefficient: F(x, x) = sum p_j x^j."""
        if j < 0:
            return GradedPoly.zero()
        if j not in self._p:
            cutoff = j + 2
            log = self.log_series(cutoff)
            two = TruncSeries(("x",), cutoff,
                              {e: p * 2 for e, p in log.coeffs.items()})
            series = self.exp_series(cutoff).compose(two)
            for k in range(cutoff):
                self._p.setdefault(k, series.coefficient(k))
        return self._p[j]

    def a_u_series(self, i, j_max):
        """A_i(u) = sum_{j <= j_max} a_{i,j} u^j as a GradedPoly."""
        out = GradedPoly.zero()
        for j in range(j_max + 1):
            aij = self.a(i, j)
            if aij:
                out = out + aij * GradedPoly.gen("u", power=j)
        return out

    def c(self, i, j):
        """Laurent coefficient c_{i,j} of u^j x^i in 1/F(u, x).

        Vanishes for j < -i-1 and for i < 0.
        """
        if i < 0 or j < -i - 1:
            return GradedPoly.zero()
        key = (i, j)
        if key not in self._c:
            self._compute_c(i, j)
        return self._c[key]

    def _compute_c(self, i_max, j_max):
        # 1/F(u,x) coefficients via D_0 = u^{-1},
        # D_i = -u^{-1} sum_{k=1}^{i} A_k(u) D_{i-k}
        hi = j_max + i_max + 2
        uinv = GradedPoly.gen("u", power=-1)
        rows = [uinv]
        for i in range(1, i_max + 1):
            acc = GradedPoly.zero()
            for k in range(1, i + 1):
                acc = acc + self.a_u_series(k, hi + 2) * rows[i - k]
            rows.append((-uinv * acc).clamp(_U, -(i + 1), hi))
        for i in range(i_max + 1):
            parts = rows[i].split_by(_U)
            for j in range(-(i + 1), j_max + 1):
                self._c[(i, j)] = parts.get(j, GradedPoly.zero())

    def c_u_series(self, i, j_lo, j_hi):
        """sum_{j_lo <= j <= j_hi} c_{i,j} u^j."""
        out = GradedPoly.zero()
        for j in range(j_lo, j_hi + 1):
            cij = self.c(i, j)
            if cij:
                out = out + cij * GradedPoly.gen("u", power=j)
        return out

    def d_small(self, i):
        """Coefficient d_i of the inverse of u(1 + bp1 x + bp2 x^2 + ...)."""
        if i not in self._d:
            uinv = GradedPoly.gen("u", power=-1)
            rows = [uinv]
            for k in range(1, i + 1):
                acc = GradedPoly.zero()
                for t in range(1, k + 1):
                    acc = acc + GradedPoly.gen("bp", t) * rows[k - t]
                rows.append(-acc)
            for k, r in enumerate(rows):
                self._d.setdefault(k, r)
        return self._d[i]

    def mischenko(self, k):
        """Normalized degree-k projective class: coeff of x^{k-1} in
        (1 + b1 x + b2 x^2 + ...)^{-k}; equals k * m_{k-1}."""
        if k < 1:
            raise SymbolicError("mischenko requires k >= 1")
        series = self.unit_series(k).invert() ** k
        return series.coefficient(k - 1)


_services = {}


def get_service(sign=SIGN_PLUS):
    if sign not in _services:
        _services[sign] = CoefficientService(sign)
    return _services[sign]


class FGLModel:
    """The universal group law F at a fixed truncation."""

    def __init__(self, cutoff, sign=SIGN_PLUS):
        self.cutoff = cutoff
        self.sign = sign
        self.service = get_service(sign)
        srv = self.service
        binv = srv.log_series(cutoff)
        yv = TruncSeries.var(("y", "z"), cutoff, "y")
        zv = TruncSeries.var(("y", "z"), cutoff, "z")
        w = binv.substitute({"x": yv}) + binv.substitute({"x": zv})
        self.F = srv.exp_series(cutoff).substitute({"x": w})

    def coefficient(self, i, j):
        return self.F.coefficient(i, j)


_models = {}


def build_fgl(cutoff, sign=SIGN_PLUS):
    key = (cutoff, sign)
    if key not in _models:
        _models[key] = FGLModel(cutoff, sign)
    return _models[key]


def two_series(cutoff, sign=SIGN_PLUS):
    """[2]x = F(x, x) as a list [p_0, ..., p_{cutoff-1}]."""
    srv = get_service(sign)
    return [srv.p(j) for j in range(cutoff)]

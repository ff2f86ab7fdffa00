"""Rational moment generating functions of simplicial measures.

The normalized generating function of a measure mu collects the moments as

    F(u) = sum over I of (|I|+d)!/(i_1! ... i_d!) * m_I(mu) * u^I.

For the uniform measure on a simplex this is d!*Vol divided by the product
of the vertex forms 1 - <v, u>, which makes every function here rational
with denominator a sub-multiset of vertex forms.  Denominators are kept as
form multisets and never expanded; cancellation is trial division by the
candidate forms only.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import (
    DegenerateDirectionError,
    DegenerateSimplexError,
    DimensionError,
    PolymomError,
)
from .geometry import VertexSet, WeightedMeasure, check_simplex, is_degenerate
from .linalg import RatMat, det, rat
from .oracle import MomentTable
from .poly import Poly, Series, monomials_upto


class LinearForm:
    """The affine form 1 - <v, u> attached to a vertex v.

    The zero vertex stands for the constant form 1, which is dropped from
    canonical denominators since it never constrains anything.
    """

    __slots__ = ("vertex",)

    def __init__(self, vertex):
        object.__setattr__(self, "vertex", tuple(rat(c) for c in vertex))

    def __setattr__(self, name, value):
        raise AttributeError("LinearForm is immutable")

    @property
    def dim(self):
        return len(self.vertex)

    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.vertex)

    def poly(self) -> Poly:
        terms = {(0,) * self.dim: Fraction(1)}
        for k, c in enumerate(self.vertex):
            if c != 0:
                exps = [0] * self.dim
                exps[k] = 1
                terms[tuple(exps)] = -c
        return Poly(self.dim, terms)

    def pairing(self) -> Poly:
        """The homogeneous part <v, u>."""
        terms = {}
        for k, c in enumerate(self.vertex):
            if c != 0:
                exps = [0] * self.dim
                exps[k] = 1
                terms[tuple(exps)] = c
        return Poly(self.dim, terms)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.vertex == other.vertex

    def __hash__(self):
        return hash(self.vertex)

    def __lt__(self, other):
        return self.vertex < other.vertex

    def __repr__(self):
        return f"LinearForm({self.vertex})"


class RatFun:
    """Polynomial numerator over a multiset of vertex linear forms."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Poly, denominator=()):
        denom = tuple(sorted(f for f in denominator if not f.is_trivial()))
        for f in denom:
            if f.dim != numerator.dim:
                raise DimensionError("denominator form dimension mismatch")
        if numerator.is_zero():
            denom = ()
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denom)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @property
    def dim(self):
        return self.numerator.dim

    def __eq__(self, other):
        return (
            isinstance(other, RatFun)
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        num = str(self.numerator)
        if not self.denominator:
            return num
        factors = "".join(f"({f.poly()})" for f in self.denominator)
        return f"({num}) / {factors}" if " " in num else f"{num} / {factors}"

    def cancel(self) -> "RatFun":
        """Divide out every denominator form that exactly divides the numerator."""
        num = self.numerator
        remaining = list(self.denominator)
        changed = True
        while changed and not num.is_zero():
            changed = False
            for i, f in enumerate(remaining):
                q = divide_linear(num, f.poly())
                if q is not None:
                    num = q
                    del remaining[i]
                    changed = True
                    break
        return RatFun(num, remaining)


def divide_linear(num: Poly, divisor: Poly):
    """Exact quotient num / divisor for a divisor of degree <= 1, else None.

    Synthetic division viewing num as univariate in one variable carried by
    the divisor, with polynomial coefficients in the others.
    """
    if divisor.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if divisor.degree() > 1:
        raise DimensionError("divisor must be linear or constant")
    if divisor.degree() <= 0:
        return num * (1 / divisor.constant_term())
    dim = num.dim
    k = next(
        v for v in range(dim) if any(e[v] == 1 and sum(e) == 1 for e in divisor.terms)
    )
    a = divisor.coefficient(tuple(1 if v == k else 0 for v in range(dim)))
    rest = divisor - Poly.monomial(dim, tuple(1 if v == k else 0 for v in range(dim)), a)
    by_deg = {}
    for e, c in num.terms.items():
        reduced = e[:k] + (0,) + e[k + 1 :]
        by_deg.setdefault(e[k], {})[reduced] = c
    top = max(by_deg, default=0)
    quotient = {}
    carry = Poly(dim, by_deg.get(top, {}))
    for t in range(top, 0, -1):
        q_t = carry * (1 / a)
        quotient[t - 1] = q_t
        below = Poly(dim, by_deg.get(t - 1, {}))
        carry = below - rest * q_t
    if not carry.is_zero():
        return None
    out = Poly.zero(dim)
    uk = Poly.variable(dim, k)
    for t, q in quotient.items():
        out = out + q * uk**t
    return out


def simplex_genfunc(s, vs: VertexSet, weight, allow_degenerate=False) -> RatFun:
    """Generating function  w / prod of the d+1 vertex forms of the simplex.

    With w = d!*Vol this is the transform of the uniform measure; degenerate
    simplices are only allowed for the singular limit terms of the weak
    solver, where the same formula is taken as the definition.
    """
    s = check_simplex(s, vs)
    if not allow_degenerate and is_degenerate(s, vs):
        raise DegenerateSimplexError(f"degenerate simplex {s}; pass allow_degenerate for singular terms")
    forms = [LinearForm(vs.points[i]) for i in s]
    return RatFun(Poly.constant(vs.dim, rat(weight)), forms)


def measure_genfunc(m: WeightedMeasure) -> RatFun:
    """Sum of the per-atom transforms over a common denominator, cancelled.

    The resulting denominator is always a sub-multiset of the vertex forms of
    the input; interior vertices introduced by a dissection cancel out.
    """
    vs = m.vertex_set
    if not m.atoms:
        return RatFun(Poly.zero(vs.dim))
    denominators = []
    for s, _ in m.atoms:
        counts = {}
        for i in s:
            f = LinearForm(vs.points[i])
            if not f.is_trivial():
                counts[f] = counts.get(f, 0) + 1
        denominators.append(counts)
    common = {}
    for counts in denominators:
        for f, c in counts.items():
            common[f] = max(common.get(f, 0), c)
    numerator = Poly.zero(vs.dim)
    for (s, w), counts in zip(m.atoms, denominators):
        part = Poly.constant(vs.dim, w)
        for f, c in common.items():
            for _ in range(c - counts.get(f, 0)):
                part = part * f.poly()
        numerator = numerator + part
    forms = [f for f, c in common.items() for _ in range(c)]
    return RatFun(numerator, forms).cancel()


def taylor(f: RatFun, order: int) -> Series:
    """Exact truncated expansion of the rational function about the origin.

    Every denominator form has constant term 1, so 1/(1 - <v,u>) expands as
    the truncated geometric series in the homogeneous pairing.
    """
    result = Series(f.numerator, order)
    for form in f.denominator:
        g = form.pairing().truncate(order)
        geo = Series(Poly.constant(f.dim, 1), order)
        power = Series(Poly.constant(f.dim, 1), order)
        for _ in range(order):
            power = power * g
            if power.poly.is_zero():
                break
            geo = geo + power
        result = result * geo
    return result


def series_to_moments(series: Series, dim: int) -> MomentTable:
    """Read a normalized generating series as a moment table.

    The coefficient at u^I is (|I|+d)!/prod(i_j!) * m_I, so dividing by that
    factor recovers the moment.  Mutually inverse with `moments_to_series`.
    """
    if series.dim != dim:
        raise DimensionError(f"series has {series.dim} variables, expected {dim}")
    table = {}
    for exps in monomials_upto(dim, series.order):
        table[exps] = series.coefficient(exps) / _normalizer(exps, dim, 0)
    return MomentTable(dim, series.order, table)


def moments_to_series(table: MomentTable) -> Series:
    terms = {}
    for exps, value in table.moments.items():
        terms[exps] = _normalizer(exps, table.dim, 0) * value
    return Series(Poly(table.dim, terms), table.order)


def _normalizer(exps, dim, extra) -> Fraction:
    scale = Fraction(factorial(sum(exps) + dim + extra))
    for k in exps:
        scale /= factorial(k)
    return scale


class TangentCone:
    """A vertex of a simple polytope with its d outgoing edge directions."""

    __slots__ = ("vertex", "edges", "det_abs")

    def __init__(self, vertex, edges):
        vertex = tuple(rat(c) for c in vertex)
        edges = tuple(tuple(rat(c) for c in e) for e in edges)
        d = len(vertex)
        if len(edges) != d or any(len(e) != d for e in edges):
            raise DimensionError(f"a simple vertex in R^{d} needs exactly {d} edge vectors")
        dt = det(RatMat.from_rows(edges))
        if dt == 0:
            raise DegenerateSimplexError(f"edge vectors at vertex {vertex} are dependent")
        object.__setattr__(self, "vertex", vertex)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "det_abs", abs(dt))

    def __setattr__(self, name, value):
        raise AttributeError("TangentCone is immutable")

    def __repr__(self):
        return f"TangentCone(vertex={self.vertex})"


class SimplePolytope:
    """Vertex-and-edge description of a simple polytope, one cone per vertex."""

    __slots__ = ("dim", "cones")

    def __init__(self, dim, cones):
        cones = tuple(cones)
        if len(cones) < dim + 1:
            raise DimensionError(f"need at least {dim + 1} vertices, got {len(cones)}")
        for c in cones:
            if len(c.vertex) != dim:
                raise DimensionError("cone dimension mismatch")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "cones", cones)

    def __setattr__(self, name, value):
        raise AttributeError("SimplePolytope is immutable")


def _pairing_poly(vector, dim) -> Poly:
    terms = {}
    for k, c in enumerate(vector):
        if c != 0:
            exps = [0] * dim
            exps[k] = 1
            terms[tuple(exps)] = rat(c)
    return Poly(dim, terms)


def brion_genfunc(p: SimplePolytope) -> RatFun:
    """Vertex-sum generating function, combined symbolically and cancelled.

    Summing (-1)^d |det K_v| / (prod_j <w_j(v), u> * (1 - <v, u>)) over the
    vertices puts everything over the product of all edge pairings and all
    vertex forms.  The edge pairings must cancel from the numerator exactly;
    failing that is a hard error since it falsifies the input polytope data.
    """
    d = p.dim
    sign = (-1) ** d
    vertex_forms = [LinearForm(c.vertex) for c in p.cones]
    edge_polys = [[_pairing_poly(e, d) for e in c.edges] for c in p.cones]
    numerator = Poly.zero(d)
    for i, cone in enumerate(p.cones):
        part = Poly.constant(d, sign * cone.det_abs)
        for j, other in enumerate(p.cones):
            if j == i:
                continue
            for ep in edge_polys[j]:
                part = part * ep
            part = part * vertex_forms[j].poly()
        numerator = numerator + part
    for eps in edge_polys:
        for ep in eps:
            q = divide_linear(numerator, ep)
            if q is None:
                raise PolymomError(
                    "edge pairing failed to cancel; cone data does not describe a simple polytope"
                )
            numerator = q
    return RatFun(numerator, vertex_forms).cancel()


def _vertex_pairings(p: SimplePolytope, z):
    z = [rat(c) for c in z]
    if len(z) != p.dim:
        raise DimensionError(f"direction of length {len(z)} in R^{p.dim}")
    data = []
    for cone in p.cones:
        vz = sum(a * b for a, b in zip(cone.vertex, z))
        edge_prod = Fraction(1)
        for e in cone.edges:
            pairing = sum(a * b for a, b in zip(e, z))
            if pairing == 0:
                raise DegenerateDirectionError(cone.vertex)
            edge_prod *= pairing
        data.append((vz, cone.det_abs / edge_prod))
    return data


def brion_axial_moment(p: SimplePolytope, z, j: int) -> Fraction:
    """Axial moment of <x,z>^j over the polytope via the vertex sum."""
    d = p.dim
    data = _vertex_pairings(p, z)
    total = sum(vz ** (j + d) * dv for vz, dv in data)
    return (-1) ** d * Fraction(factorial(j), factorial(j + d)) * total


def brion_identity_residuals(p: SimplePolytope, z):
    """The d sums over vertices of <v,z>^j D_v(z), j = 0..d-1; all must vanish."""
    data = _vertex_pairings(p, z)
    return tuple(
        sum(vz**j * dv for vz, dv in data) for j in range(p.dim)
    )


def density_op(f: Series, rho: Poly) -> Series:
    """Apply rho(d/du) to the series of F_mu, yielding the series of F^rho_mu.

    The coefficients of the result are (|I|+d+deg rho)!/prod(i_j!) times the
    moments of the measure rho*mu.
    """
    delta = _homogeneous_degree(rho)
    if f.dim != rho.dim:
        raise DimensionError("density and series dimension mismatch")
    if f.order < delta:
        raise DimensionError(f"series order {f.order} too small for degree {delta} density")
    out = Poly.zero(f.dim)
    for exps, coef in rho.terms.items():
        part = f.poly
        for k, n in enumerate(exps):
            for _ in range(n):
                part = part.partial(k)
        out = out + part * coef
    return Series(out, f.order - delta)


def euler_op(f_rho_mu: Series, dim: int, delta: int) -> Series:
    """Renormalize the series of F_(rho mu) into the series of F^rho_mu.

    Applies the product over l = d+1 .. d+delta of (sum_k u_k d/du_k + l),
    which multiplies the coefficient at u^I by (|I|+d+1) ... (|I|+d+delta).
    The printed range starting at l = d fails the 1-d uniform-measure check;
    the range used here is the one the identity actually satisfies.
    """
    terms = {}
    for exps, coef in f_rho_mu.poly.terms.items():
        n = sum(exps)
        for ell in range(dim + 1, dim + delta + 1):
            coef = coef * (n + ell)
        terms[exps] = coef
    return Series(Poly(f_rho_mu.dim, terms), f_rho_mu.order)


def _homogeneous_degree(rho: Poly) -> int:
    degrees = {sum(e) for e in rho.terms}
    if len(degrees) > 1:
        raise DimensionError("density polynomial must be homogeneous")
    return degrees.pop() if degrees else 0

"""The inverse moment problem on a known vertex set.

Given moments up to order N-d-1 of a signed simplicial measure on N known
vertices, the numerator of its generating function is recovered by one
truncated multiplication, and the weights fall out of an exact linear solve
against the matrix whose columns are the coefficient vectors of all products
of N-d-1 vertex forms.  Strongly non-degenerate sets use the square matrix
over a through-pivot basis; weakly non-degenerate ones (including multisets)
use a full-rank minor of the extended matrix, where columns complementary to
degenerate simplices carry singular limit measures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import (
    DimensionError,
    IncompleteMomentsError,
    NotStronglyNonDegenerateError,
    NotWeaklyNonDegenerateError,
)
from .geometry import Degeneracy, VertexSet, classify, is_degenerate, simplex
from .linalg import RatMat, det, solve
from .oracle import MomentTable
from .poly import Poly, monomials_upto
from .genfunc import LinearForm, moments_to_series


def numerator_degree(vs: VertexSet) -> int:
    return len(vs) - vs.dim - 1


def simplex_for_column(column, n) -> tuple:
    """The (d+1)-simplex complementary to a product-column index subset."""
    return tuple(sorted(set(range(n)) - set(column)))


@dataclass(frozen=True)
class FormBasis:
    """A choice of product columns indexing a (candidate) basis of measures."""

    vertex_set: VertexSet
    pivot: int
    columns: tuple  # tuples of 0-based form indices, each of size N-d-1

    def __post_init__(self):
        n = len(self.vertex_set)
        k = numerator_degree(self.vertex_set)
        for c in self.columns:
            if len(c) != k or len(set(c)) != len(c):
                raise DimensionError(f"column {c} is not a {k}-subset")
            if any(i < 0 or i >= n for i in c):
                raise DimensionError(f"column {c} out of range")
        if len(set(self.columns)) != len(self.columns):
            raise DimensionError("duplicate columns")

    def simplices(self):
        n = len(self.vertex_set)
        return [simplex_for_column(c, n) for c in self.columns]


def _check_pivot(pivot, n):
    if pivot is None:
        return n - 1
    if not 0 <= pivot < n:
        raise DimensionError(f"pivot index {pivot} out of range for {n} vertices")
    return pivot


def strong_basis(vs: VertexSet, pivot=None) -> FormBasis:
    """All products avoiding the pivot form: one column per through-pivot simplex."""
    n = len(vs)
    pivot = _check_pivot(pivot, n)
    others = [i for i in range(n) if i != pivot]
    cols = tuple(tuple(c) for c in combinations(others, numerator_degree(vs)))
    return FormBasis(vs, pivot, cols)


def extended_columns(vs: VertexSet):
    """All products of N-d-1 distinct forms, in ascending lexicographic order."""
    return tuple(tuple(c) for c in combinations(range(len(vs)), numerator_degree(vs)))


def _column_poly(column, vs: VertexSet) -> Poly:
    p = Poly.constant(vs.dim, 1)
    for i in column:
        p = p * LinearForm(vs.points[i]).poly()
    return p


def product_matrix(basis: FormBasis) -> RatMat:
    """Coefficients of the form products, one column per basis column.

    Rows run over the monomials of degree <= N-d-1 in canonical graded-lex
    order, which reproduces the row order (1, u1, u2, u1^2, u1*u2, u2^2)
    used throughout the worked examples.
    """
    vs = basis.vertex_set
    rows = monomials_upto(vs.dim, numerator_degree(vs))
    polys = [_column_poly(c, vs) for c in basis.columns]
    return RatMat.from_rows([[p.coefficient(e) for p in polys] for e in rows])


def build_extended(vs: VertexSet) -> RatMat:
    """The full coefficient matrix over all C(N, N-d-1) product columns."""
    return product_matrix(FormBasis(vs, len(vs) - 1, extended_columns(vs)))


def form_matrix(vs: VertexSet, include_last=False) -> RatMat:
    """The (d+1) x (N-1) matrix with a unit top row and -v_i below, per form.

    With include_last, the pivot form's column is appended as in the extended
    setting.
    """
    n = len(vs) if include_last else len(vs) - 1
    rows = [[Fraction(1)] * n]
    for k in range(vs.dim):
        rows.append([-vs.points[i][k] for i in range(n)])
    return RatMat.from_rows(rows)


def _form_minor_det(vs: VertexSet, indices) -> Fraction:
    """Determinant of the homogenized forms of the given d+1 vertices."""
    rows = [[Fraction(1)] * len(indices)]
    for k in range(vs.dim):
        rows.append([-vs.points[i][k] for i in indices])
    return det(RatMat.from_rows(rows))


def explicit_inverse(basis: FormBasis) -> RatMat:
    """Closed-form inverse of the product matrix for strong bases.

    The row for a product of forms J has, at the monomial with homogenized
    exponents (n_0, ..., n_d), the entry

        prod_j  c_j ^ n_j   /   prod over j' in J of  D(j', complement)

    where the c_j are the coefficients of the linear form obtained by
    replacing the first column of the complement's homogenized minor with
    (u_0, ..., u_d), and D(j', I) is that minor with the form j' in front.
    """
    vs = basis.vertex_set
    d = vs.dim
    n = len(vs)
    k = numerator_degree(vs)
    ground = [i for i in range(n) if i != basis.pivot]
    if classify(vs).kind is not Degeneracy.STRONG:
        raise NotStronglyNonDegenerateError("explicit inverse requires a strongly non-degenerate set")
    rows = []
    mono = monomials_upto(d, k)
    for column in basis.columns:
        complement = [i for i in ground if i not in column]
        if len(complement) != d:
            raise DimensionError("explicit inverse requires a strong through-pivot basis")
        coeffs = []
        for j in range(d + 1):
            minor_rows = []
            for r in range(d + 1):
                if r == j:
                    continue
                if r == 0:
                    minor_rows.append([Fraction(1)] * d)
                else:
                    minor_rows.append([-vs.points[i][r - 1] for i in complement])
            coeffs.append((-1) ** j * det(RatMat.from_rows(minor_rows)))
        denom = Fraction(1)
        for j in column:
            denom *= _form_minor_det(vs, [j] + complement)
        row = []
        for exps in mono:
            n0 = k - sum(exps)
            entry = coeffs[0] ** n0
            for v, e in enumerate(exps):
                entry *= coeffs[v + 1] ** e
            row.append(entry / denom)
        rows.append(row)
    return RatMat.from_rows(rows)


def recover_numerator(table: MomentTable, vs: VertexSet) -> Poly:
    """Numerator of the generating function from moments up to order N-d-1.

    This is the truncation at degree N-d-1 of the normalized moment series
    times the product of all N vertex forms.
    """
    k = numerator_degree(vs)
    if table.dim != vs.dim:
        raise DimensionError(f"moments in R^{table.dim} against vertices in R^{vs.dim}")
    needed = set(monomials_upto(vs.dim, k))
    missing = needed - set(table.moments)
    if missing:
        raise IncompleteMomentsError(f"need all moments up to order {k}", missing)
    if table.order > k:
        table = MomentTable(vs.dim, k, {e: table.moments[e] for e in needed})
    series = moments_to_series(table)
    phi = Poly.constant(vs.dim, 1)
    for p in vs.points:
        phi = (phi * LinearForm(p).poly()).drop_above(k)
    return (series.poly * phi).drop_above(k)


@dataclass(frozen=True)
class Reconstruction:
    """Solved weights, keyed by simplex, with degenerate ones marked.

    `singular` is true exactly when some degenerate simplex carries nonzero
    weight, meaning the input moments do not come from a generalized-polytope
    measure on this vertex set.  `residual` is the difference between the
    recovered numerator and the one realized by the weights; the exact solve
    leaves it identically zero.
    """

    vertex_set: VertexSet
    pivot: int
    weights: tuple  # (simplex, weight, is_degenerate) triples in column order
    residual: Poly

    @property
    def singular_simplices(self):
        return tuple(s for s, w, dg in self.weights if dg and w != 0)

    @property
    def is_singular(self) -> bool:
        return bool(self.singular_simplices)

    def weight_vector(self):
        return tuple(w for _, w, _ in self.weights)

    def to_measure(self, drop_degenerate=False):
        """The non-singular part as a WeightedMeasure.

        Raises if a degenerate simplex carries weight and drop_degenerate is
        not set.
        """
        from .geometry import WeightedMeasure

        if self.is_singular and not drop_degenerate:
            raise NotWeaklyNonDegenerateError(
                f"reconstruction is singular on {self.singular_simplices}"
            )
        atoms = [(s, w) for s, w, dg in self.weights if not dg]
        return WeightedMeasure(self.vertex_set, atoms)


def _reconstruction(basis: FormBasis, weights) -> Reconstruction:
    vs = basis.vertex_set
    entries = []
    for column, w in zip(basis.columns, weights):
        s = simplex_for_column(column, len(vs))
        entries.append((s, w, is_degenerate(s, vs)))
    return Reconstruction(vs, basis.pivot, tuple(entries), Poly.zero(vs.dim))


def solve_strong(table: MomentTable, vs: VertexSet, pivot=None) -> Reconstruction:
    """Unique weights on the through-pivot simplices matching the moments."""
    cls = classify(vs)
    if cls.kind is not Degeneracy.STRONG:
        raise NotStronglyNonDegenerateError(
            f"vertex set has degenerate subsets {cls.degenerate}; use solve_weak"
        )
    basis = strong_basis(vs, pivot)
    numerator = recover_numerator(table, vs)
    rhs = [numerator.coefficient(e) for e in monomials_upto(vs.dim, numerator_degree(vs))]
    weights = solve(product_matrix(basis), rhs)
    return _reconstruction(basis, weights)


def select_minor(vs: VertexSet, pivot=None, forced=None) -> FormBasis:
    """Deterministic full-rank column choice for the extended matrix.

    Columns are admitted greedily by exact rank, trying first the columns
    complementary to degenerate simplices (these are forced: the singular
    measures they carry are independent of everything else), then columns
    complementary to through-pivot simplices, then the rest, each bucket in
    ascending column order.
    """
    n = len(vs)
    pivot = _check_pivot(pivot, n)
    cls = classify(vs)
    if cls.kind is Degeneracy.NEITHER:
        raise NotWeaklyNonDegenerateError(
            "some d+2 points lie in a hyperplane; the product columns cannot reach full rank"
        )
    degenerate = set(cls.degenerate)
    all_columns = extended_columns(vs)
    if forced is not None:
        chosen = [tuple(c) for c in forced]
        if sorted(chosen) != sorted(set(chosen)) or any(c not in all_columns for c in chosen):
            raise DimensionError("forced column set is not a set of valid columns")
    else:
        first, second, third = [], [], []
        for c in all_columns:
            s = simplex_for_column(c, n)
            if s in degenerate:
                first.append(c)
            elif pivot in s:
                second.append(c)
            else:
                third.append(c)
        chosen = []
        rows = monomials_upto(vs.dim, numerator_degree(vs))
        target = comb(n - 1, vs.dim)
        echelon = []
        for c in first + second + third:
            vec = [_column_poly(c, vs).coefficient(e) for e in rows]
            if _extends_rank(echelon, vec):
                chosen.append(c)
                if len(chosen) == target:
                    break
        chosen.sort()
    basis = FormBasis(vs, pivot, tuple(chosen))
    m = product_matrix(basis)
    if m.rows != m.cols or det(m) == 0:
        raise NotWeaklyNonDegenerateError("selected columns do not form a non-vanishing minor")
    return basis


def _extends_rank(echelon, vec):
    """Reduce vec against the stored echelon rows; keep it if independent."""
    v = list(vec)
    for lead, row in echelon:
        if v[lead] != 0:
            f = v[lead] / row[lead]
            v = [a - f * b for a, b in zip(v, row)]
    lead = next((i for i, a in enumerate(v) if a != 0), None)
    if lead is None:
        return False
    echelon.append((lead, v))
    return True


def solve_weak(table: MomentTable, vs: VertexSet, pivot=None, columns=None) -> Reconstruction:
    """Weights over a selected minor, with singular terms on degenerate columns."""
    basis = select_minor(vs, pivot, columns)
    numerator = recover_numerator(table, vs)
    rhs = [numerator.coefficient(e) for e in monomials_upto(vs.dim, numerator_degree(vs))]
    weights = solve(product_matrix(basis), rhs)
    return _reconstruction(basis, weights)


def solve_weights(numerator: Poly, basis: FormBasis):
    """Weights realizing a given numerator over the basis columns."""
    rhs = [numerator.coefficient(e) for e in monomials_upto(basis.vertex_set.dim, numerator_degree(basis.vertex_set))]
    return solve(product_matrix(basis), rhs)


def dimension_and_basis(vs: VertexSet, pivot=None):
    """Dimension of the simplicial measure space, with a pruned simplex basis.

    The dimension is C(N-1, d) minus the number of degenerate (d+1)-subsets.
    The basis consists of non-degenerate through-pivot simplices, greedily
    pruned to independent columns in canonical simplex order.
    """
    n = len(vs)
    pivot = _check_pivot(pivot, n)
    cls = classify(vs)
    if cls.kind is Degeneracy.NEITHER:
        raise NotWeaklyNonDegenerateError("dimension formula requires a weakly non-degenerate set")
    dim_space = comb(n - 1, vs.dim) - len(cls.degenerate)
    candidates = sorted(
        simplex(c + (pivot,))
        for c in combinations([i for i in range(n) if i != pivot], vs.dim)
    )
    rows = monomials_upto(vs.dim, numerator_degree(vs))
    echelon = []
    chosen = []
    for s in candidates:
        if s in set(cls.degenerate):
            continue
        column = tuple(sorted(set(range(n)) - set(s)))
        vec = [_column_poly(column, vs).coefficient(e) for e in rows]
        if _extends_rank(echelon, vec):
            chosen.append(s)
    if len(chosen) != dim_space:
        raise NotWeaklyNonDegenerateError(
            f"pruned basis has size {len(chosen)}, expected {dim_space}"
        )
    return dim_space, chosen


@dataclass(frozen=True)
class DetFactorReport:
    """Determinant of a chosen minor against the product of form minors.

    Over configurations with the same column combinatorics the ratio is a
    fixed constant, and the determinant vanishes exactly when some qualifying
    (d+1)-tuple of forms becomes dependent.
    """

    determinant: Fraction
    qualifying: tuple  # (d+1)-index-subsets meeting every column
    minor_product: Fraction
    ratio: Fraction | None


def det_factor_report(vs: VertexSet, columns) -> DetFactorReport:
    n = len(vs)
    columns = [tuple(c) for c in columns]
    basis = FormBasis(vs, n - 1, tuple(columns))
    m = product_matrix(basis)
    if m.rows != m.cols:
        raise DimensionError("determinant factorization needs a square minor")
    d_value = det(m)
    qualifying = []
    product = Fraction(1)
    for j_set in combinations(range(n), vs.dim + 1):
        if all(set(j_set) & set(c) for c in columns):
            qualifying.append(j_set)
            product *= _form_minor_det(vs, list(j_set))
    ratio = d_value / product if product != 0 else None
    return DetFactorReport(d_value, tuple(qualifying), product, ratio)

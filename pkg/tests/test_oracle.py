import random
from fractions import Fraction as F
from math import factorial

import pytest

from polymom import (
    MomentTable,
    Poly,
    VertexSet,
    WeightedMeasure,
    axial_moment,
    measure_moments,
    simplex_monomial_moment,
    uniform_measure,
)
from polymom.errors import DegenerateSimplexError, DimensionError


def test_standard_simplex_closed_form():
    # integral of x^i y^j over the standard triangle is i! j! / (i+j+2)!
    vs = VertexSet(2, [(0, 0), (1, 0), (0, 1)])
    for i in range(4):
        for j in range(4):
            expect = F(factorial(i) * factorial(j), factorial(i + j + 2))
            assert simplex_monomial_moment((0, 1, 2), vs, (i, j)) == expect


def test_triangle_values(triangle_115232):
    t = triangle_115232
    assert simplex_monomial_moment((0, 1, 2), t, (0, 0)) == F(7, 2)
    assert simplex_monomial_moment((0, 1, 2), t, (1, 0)) == 7
    assert simplex_monomial_moment((0, 1, 2), t, (2, 2)) == F(21217, 180)


def test_degenerate_rejected():
    vs = VertexSet(2, [(0, 0), (1, 1), (2, 2), (0, 1)])
    with pytest.raises(DegenerateSimplexError):
        simplex_monomial_moment((0, 1, 2), vs, (0, 0))


def test_interval_moments():
    vs = VertexSet(1, [(0,), (1,)])
    for j in range(7):
        assert simplex_monomial_moment((0, 1), vs, (j,)) == F(1, j + 1)


def test_unit_density_mass():
    vs = VertexSet(2, [(0, 0), (1, 0), (0, 1)])
    m = uniform_measure(vs, [(0, 1, 2)])
    assert measure_moments(m, 0)[(0, 0)] == F(1, 2)


def test_pentagon_reconstruction_moments(pentagon_set):
    weights = [((2, 3, 4), 1), ((1, 3, 4), -22), ((1, 2, 4), 26),
               ((0, 3, 4), 15), ((0, 2, 4), -16), ((0, 1, 4), -2)]
    m = WeightedMeasure(pentagon_set, weights)
    table = measure_moments(m, 2)
    assert [table[e] for e in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]] == [
        1, 2, 3, 4, 5, 6,
    ]


def test_polynomial_density():
    vs = VertexSet(1, [(0,), (1,)])
    m = uniform_measure(vs, [(0, 1)])
    table = measure_moments(m, 5, Poly.monomial(1, (1,)))
    for i in range(6):
        assert table[(i,)] == F(1, i + 2)


def test_table_completeness_enforced():
    with pytest.raises(DimensionError):
        MomentTable(2, 1, {(0, 0): F(1)})


def test_additivity_under_dissection():
    # split a triangle through an interior point; moments add exactly
    vs = VertexSet(2, [(0, 0), (3, 0), (0, 3), (1, 1)])
    whole = uniform_measure(vs, [(0, 1, 2)])
    parts = uniform_measure(vs, [(0, 1, 3), (1, 2, 3), (0, 2, 3)])
    assert measure_moments(whole, 4) == measure_moments(parts, 4)


def test_scaling_law():
    rng = random.Random(3)
    pts = [(0, 0), (2, 1), (1, 3)]
    vs = VertexSet(2, pts)
    doubled = VertexSet(2, [(2 * x, 2 * y) for x, y in pts])
    for e in [(0, 0), (1, 0), (2, 1), (0, 3)]:
        lhs = simplex_monomial_moment((0, 1, 2), doubled, e)
        rhs = F(2) ** (sum(e) + 2) * simplex_monomial_moment((0, 1, 2), vs, e)
        assert lhs == rhs


class TestAxialMoments:
    def test_mass(self, triangle_115232):
        m = uniform_measure(triangle_115232, [(0, 1, 2)])
        assert axial_moment(m, (1, 0), 0) == F(7, 2)

    def test_first_moment(self, triangle_115232):
        m = uniform_measure(triangle_115232, [(0, 1, 2)])
        assert axial_moment(m, (1, 0), 1) == 7

    def test_interval(self):
        vs = VertexSet(1, [(0,), (1,)])
        m = uniform_measure(vs, [(0, 1)])
        for j in range(6):
            assert axial_moment(m, (1,), j) == F(1, j + 1)

    def test_matches_monomial_moment_on_basis_vector(self, triangle_115232):
        m = uniform_measure(triangle_115232, [(0, 1, 2)])
        for j in range(4):
            assert axial_moment(m, (0, 1), j) == simplex_monomial_moment(
                (0, 1, 2), triangle_115232, (0, j)
            )

    def test_general_direction_matches_expansion(self, triangle_115232):
        m = uniform_measure(triangle_115232, [(0, 1, 2)])
        z = (F(1, 2), F(-2, 3))
        table = measure_moments(m, 3)
        expect = sum(
            F(factorial(3), factorial(a) * factorial(b)) * z[0] ** a * z[1] ** b * table[(a, b)]
            for a in range(4)
            for b in range(4)
            if a + b == 3
        )
        assert axial_moment(m, z, 3) == expect

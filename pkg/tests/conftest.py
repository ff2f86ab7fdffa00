"""Shared fixtures: the worked-example configurations used throughout."""

from fractions import Fraction as F

import pytest

from polymom import MomentTable, VertexSet


@pytest.fixture
def triangle_115232():
    """Triangle with vertices (1,1), (2,5), (3,2); area 7/2."""
    return VertexSet(2, [(1, 1), (2, 5), (3, 2)])


@pytest.fixture
def pentagon_set():
    """Strongly non-degenerate 5-point set (1,0),(2,1),(1,2),(0,1),(0,0)."""
    return VertexSet(2, [(1, 0), (2, 1), (1, 2), (0, 1), (0, 0)])


@pytest.fixture
def pentagon_moments():
    """The ad hoc moment table (1,2,3,4,5,6) used with the pentagon set."""
    values = {(0, 0): 1, (1, 0): 2, (0, 1): 3, (2, 0): 4, (1, 1): 5, (0, 2): 6}
    return MomentTable(2, 2, {k: F(v) for k, v in values.items()})


@pytest.fixture
def square_with_center():
    """Center + square corners: weakly non-degenerate, two flat triples."""
    return VertexSet(2, [(1, 1), (2, 0), (2, 2), (0, 2), (0, 0)])


@pytest.fixture
def multiset_with_duplicate():
    """Multiset with a repeated origin: still weakly non-degenerate."""
    return VertexSet(2, [(0, 0), (2, 0), (1, 1), (0, 2), (0, 0)])

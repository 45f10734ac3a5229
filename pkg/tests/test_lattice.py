from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from toric_mazur.lattice.enumeration import Halfspace, box_points, fiber_interval, hull_halfspaces, satisfies
from toric_mazur.lattice.models import Character, Cocharacter, LatticePointSet, LatticeTag, SweepReport

integers = st.integers(-20, 20)


def test_character_arithmetic():
    u, v = Character.of(1, 0, -1), Character.of(0, 1, -1)
    assert u + v == Character.of(1, 1, -2)
    assert u - v == Character.of(1, -1, 0)
    assert 2 * u == u * 2 == Character.of(2, 0, -2)
    assert u.dot(v) == 1
    assert (u * Fraction(1, 2)).to_list() == ["1/2", 0, "-1/2"]
    assert str(u) == "(1,0,-1)"


def test_character_rejects_floats():
    with pytest.raises(ValueError):
        Character.of(0.5, -0.5)


def test_as_ints_requires_integral():
    with pytest.raises(ValueError):
        Character.of(Fraction(1, 2), Fraction(-1, 2)).as_ints()


@given(coords=st.lists(integers, min_size=3, max_size=3), k=integers)
def test_cocharacter_modulo_diagonal(coords, k):
    v = Cocharacter(tuple(coords))
    shifted = Cocharacter(tuple(c + k for c in coords))
    assert v == shifted
    assert hash(v) == hash(shifted)
    assert v.canonical[-1] == 0
    assert Cocharacter(tuple(coords), quotient=False) != Cocharacter(tuple(c + 1 for c in coords), quotient=False)


def test_point_set_sorted_and_deduplicated():
    points = LatticePointSet.from_points([Character.of(1, 0), Character.of(0, 1), Character.of(1, 0)])
    assert [p.to_list() for p in points] == [[0, 1], [1, 0]]
    assert Character.of(0, 1) in points
    assert points.to_dict() == {"lattice": "full", "size": 2, "points": [[0, 1], [1, 0]]}


def test_point_set_tags():
    points = LatticePointSet.from_points([], LatticeTag.LEVI, batches=[2, 1])
    assert points.to_dict()["batches"] == [2, 1]
    assert len(points) == 0


def test_sweep_report_elapsed_is_integral_milliseconds():
    report = SweepReport("C", instances=4, elapsed=0.0126)
    assert report.passed
    assert report.to_dict()["elapsed_ms"] == 13


def test_box_points_fix_the_sum():
    points = list(box_points([0, 0, 0], [2, 2, 2], 2))
    assert len(points) == 6
    assert all(sum(p) == 2 for p in points)
    assert list(box_points([], [], 0)) == []


def test_fiber_interval():
    square = [Halfspace((1, 0), 1), Halfspace((-1, 0), 0), Halfspace((0, 1), 1), Halfspace((0, -1), 0)]
    interval = fiber_interval((0, Fraction(1, 2)), (1, 0), square)
    assert interval == (0, 1)
    assert fiber_interval((0, 2), (1, 0), square).is_empty


def test_empty_sweep_report_does_not_pass():
    report = SweepReport("oracle")
    assert report.instances == 0
    assert not report.passed
    assert report.to_dict()["passed"] is False


def test_hull_of_a_triangle():
    hull = hull_halfspaces([(0, 0), (2, 0), (0, 2)])
    assert satisfies((0, 0), hull)
    assert satisfies((1, 1), hull)
    assert satisfies((Fraction(1, 2), Fraction(3, 2)), hull)
    assert not satisfies((Fraction(3, 2), Fraction(3, 4)), hull)
    assert not satisfies((-1, 0), hull)


def test_hull_of_a_flat_polygon_keeps_its_equation():
    # a segment on the line x + y = 2
    hull = hull_halfspaces([(0, 2), (2, 0), (1, 1)])
    assert satisfies((Fraction(1, 2), Fraction(3, 2)), hull)
    assert not satisfies((1, 0), hull)
    assert not satisfies((1, 2), hull)
    assert not satisfies((3, -1), hull)


def test_hull_of_a_point():
    hull = hull_halfspaces([(1, -1, 0)])
    assert satisfies((1, -1, 0), hull)
    assert not satisfies((0, 0, 0), hull)


def test_hull_needs_points():
    with pytest.raises(ValueError):
        hull_halfspaces([])


@given(points=st.lists(st.tuples(integers, integers, integers), min_size=1, max_size=8))
def test_hull_contains_generators_and_barycenter(points):
    hull = hull_halfspaces(points)
    assert all(satisfies(p, hull) for p in points)
    barycenter = tuple(Fraction(sum(c), len(points)) for c in zip(*points))
    assert satisfies(barycenter, hull)
    outside = tuple(max(p[0] for p in points) + 1 if i == 0 else 0 for i in range(3))
    assert not satisfies(outside, hull)


"""
Exact enumeration primitives: integer boxes, half-space tests, fiber intervals and
convex hulls in H-representation.

A half-space is stored as ``(normal, bound)`` meaning ``normal . x <= bound``.
"""

from __future__ import annotations

import itertools
import logging
import math
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

import cdd

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


class Halfspace(NamedTuple):
    normal: Tuple[Number, ...]
    bound: Number

    def holds(self, point: Sequence[Number]) -> bool:
        return sum(a * x for a, x in zip(self.normal, point)) <= self.bound


class Interval(NamedTuple):
    """Closed interval; ``None`` ends are unbounded."""

    low: Optional[Fraction]
    high: Optional[Fraction]

    @property
    def is_empty(self) -> bool:
        return self.low is not None and self.high is not None and self.low > self.high


def box_points(lower: Sequence[int], upper: Sequence[int], total: int) -> Iterator[Tuple[int, ...]]:
    """
    Integer points of the box ``lower <= x <= upper`` whose coordinates sum to ``total``.

    The last coordinate is solved for, so the scan is over a box of one dimension less.
    """
    if len(lower) != len(upper):
        raise ValueError("Box bounds differ in length")
    if not lower:
        return
    head = [range(lo, hi + 1) for lo, hi in zip(lower[:-1], upper[:-1])]
    for prefix in itertools.product(*head):
        last = total - sum(prefix)
        if lower[-1] <= last <= upper[-1]:
            yield prefix + (last,)


def satisfies(point: Sequence[Number], halfspaces: Sequence[Halfspace]) -> bool:
    return all(h.holds(point) for h in halfspaces)


def fiber_interval(
        point: Sequence[Number],
        direction: Sequence[Number],
        halfspaces: Sequence[Halfspace],
) -> Interval:
    """
    Values of t for which ``point + t * direction`` satisfies every half-space.

    :param point: Base point of the line.
    :param direction: Direction of the line.
    :param halfspaces: Constraints ``normal . x <= bound``.
    :return: The (possibly empty or unbounded) interval of admissible t.
    """
    low: Optional[Fraction] = None
    high: Optional[Fraction] = None

    for h in halfspaces:
        slope = sum(a * d for a, d in zip(h.normal, direction))
        slack = Fraction(h.bound) - sum(a * x for a, x in zip(h.normal, point))
        if slope == 0:
            if slack < 0:
                return Interval(Fraction(1), Fraction(0))
            continue
        limit = slack / slope
        if slope > 0:
            high = limit if high is None else min(high, limit)
        else:
            low = limit if low is None else max(low, limit)

    return Interval(low, high)


def hull_halfspaces(points: Sequence[Sequence[Number]]) -> List[Halfspace]:
    """
    H-representation of the convex hull of ``points``, computed by cdd in exact arithmetic.

    cdd returns rows ``(b, a)`` meaning ``b + a . x >= 0``; rows in its linearity set are
    equations and become a pair of opposite half-spaces.

    :param points: Generators of the hull.
    :return: Half-spaces ``normal . x <= bound`` cutting out the hull.
    :raises ValueError: If ``points`` is empty.
    """
    if not points:
        raise ValueError("Cannot take the convex hull of no points")
    matrix = cdd.Matrix([[1, *(Fraction(x) for x in p)] for p in points], number_type="fraction")
    matrix.rep_type = cdd.RepType.GENERATOR
    inequalities = cdd.Polyhedron(matrix).get_inequalities()

    halfspaces: List[Halfspace] = []
    for i in range(inequalities.row_size):
        b, *a = (Fraction(x) for x in inequalities[i])
        halfspaces.append(Halfspace(tuple(-x for x in a), b))
        if i in inequalities.lin_set:
            halfspaces.append(Halfspace(tuple(a), -b))
    logger.debug("Hull of %d points: %d half-spaces", len(points), len(halfspaces))
    return halfspaces


def ceil_fraction(value: Number) -> int:
    return math.ceil(Fraction(value))


def floor_fraction(value: Number) -> int:
    return math.floor(Fraction(value))

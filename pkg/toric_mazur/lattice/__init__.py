from .enumeration import Halfspace, Interval, box_points, fiber_interval, hull_halfspaces, satisfies
from .models import (
    Character,
    Cocharacter,
    CohomologyReport,
    LatticePointSet,
    LatticeTag,
    ProjectionReport,
    StepReport,
    SweepReport,
)

__all__ = [
    "Character",
    "Cocharacter",
    "CohomologyReport",
    "Halfspace",
    "Interval",
    "LatticePointSet",
    "LatticeTag",
    "ProjectionReport",
    "StepReport",
    "SweepReport",
    "box_points",
    "fiber_interval",
    "hull_halfspaces",
    "satisfies",
]

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ..utils.serialization import format_rational, format_vector, parse_rational

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Character:
    """
    Represents a character of the maximal torus as an exact rational vector.

    Integral characters have integer coordinates; projected characters may be half-integral.

    :param coords: Coordinates in Z^n (or Q^n after a projection).
    """

    coords: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(parse_rational(c) for c in self.coords))

    @classmethod
    def of(cls, *values: Any) -> Character:
        return cls(tuple(values))

    @classmethod
    def zero(cls, n: int) -> Character:
        return cls((0,) * n)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> Fraction:
        return self.coords[index]

    def __add__(self, other: Character) -> Character:
        return Character(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Character) -> Character:
        return Character(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Character:
        return Character(tuple(-a for a in self.coords))

    def __mul__(self, scalar: Rational) -> Character:
        return Character(tuple(a * scalar for a in self.coords))

    __rmul__ = __mul__

    def dot(self, other: Union[Character, Sequence[Rational]]) -> Fraction:
        return sum((Fraction(a) * b for a, b in zip(self.coords, other)), Fraction(0))

    @property
    def total(self) -> Fraction:
        """Coordinate sum."""
        return sum(self.coords, Fraction(0))

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def as_ints(self) -> Tuple[int, ...]:
        """
        :raises ValueError: If some coordinate is not an integer.
        """
        if not self.is_integral:
            raise ValueError(f"{self} is not integral")
        return tuple(c.numerator for c in self.coords)

    def to_list(self) -> List[Union[int, str]]:
        return format_vector(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(format_rational(c)) for c in self.coords) + ")"


@dataclass(frozen=True, eq=False)
class Cocharacter:
    """
    Represents a cocharacter, taken modulo Z(1,...,1) when ``quotient`` is set.

    The coordinates are kept as constructed for display; equality, hashing and pairing
    use the canonical representative whose last coordinate is 0.

    :param coords: Integer coordinates of a representative.
    :param quotient: Whether the lattice is Z^n / Z(1,...,1).
    """

    coords: Tuple[int, ...]
    quotient: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def canonical(self) -> Tuple[int, ...]:
        if not self.quotient:
            return self.coords
        shift = self.coords[-1]
        return tuple(c - shift for c in self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cocharacter):
            return NotImplemented
        return self.quotient == other.quotient and self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash((self.quotient, self.canonical))

    def __neg__(self) -> Cocharacter:
        return Cocharacter(tuple(-c for c in self.coords), self.quotient)

    def __add__(self, other: Cocharacter) -> Cocharacter:
        return Cocharacter(tuple(a + b for a, b in zip(self.coords, other.coords)), self.quotient)

    def __len__(self) -> int:
        return len(self.coords)

    def to_list(self) -> List[int]:
        return list(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


class LatticeTag(str, Enum):
    FULL = "full"
    PROJECTED = "projected"
    LEVI = "levi"


@dataclass(frozen=True)
class LatticePointSet:
    """
    Enumerated points of a polytope, sorted lexicographically.

    :param points: The points.
    :param tag: Lattice the points live in.
    :param alpha: The root for a projected set.
    :param batches: The batches for a Levi-projected set.
    """

    points: Tuple[Character, ...]
    tag: LatticeTag = LatticeTag.FULL
    alpha: Optional[Character] = None
    batches: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_points(
            cls,
            points: Iterable[Character],
            tag: LatticeTag = LatticeTag.FULL,
            alpha: Optional[Character] = None,
            batches: Optional[Sequence[int]] = None,
    ) -> LatticePointSet:
        ordered = tuple(sorted(set(points), key=lambda c: c.coords))
        return cls(ordered, tag, alpha, tuple(batches) if batches is not None else None)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Character]:
        return iter(self.points)

    def __contains__(self, item: object) -> bool:
        return item in self.as_set()

    def as_set(self) -> FrozenSet[Character]:
        return frozenset(self.points)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "lattice": self.tag.value,
            "size": len(self.points),
            "points": [p.to_list() for p in self.points],
        }
        if self.alpha is not None:
            data["alpha"] = self.alpha.to_list()
        if self.batches is not None:
            data["batches"] = list(self.batches)
        return data


@dataclass
class CohomologyReport:
    """
    Dimensions read off the sequence H^0(D) -> H^0(D_alpha) -> H^1(ideal twist) -> 0.

    :param h0_dim: Number of lattice points of the divisor polytope.
    :param h0_divisor_dim: Number of projected lattice points in the projected polytope.
    :param coker_dim: Dimension of the cokernel of the restriction map.
    :param missing: Projected points not reached by the restriction map.
    :param alpha: The root.
    :param per_eigenweight: Topological H^1 dimension per eigenweight, when computed.
    """

    h0_dim: int
    h0_divisor_dim: int
    coker_dim: int
    missing: Tuple[Character, ...]
    alpha: Character
    per_eigenweight: Optional[Dict[Character, int]] = None

    @property
    def oracle_total(self) -> Optional[int]:
        if self.per_eigenweight is None:
            return None
        return sum(self.per_eigenweight.values())

    @property
    def oracle_agrees(self) -> Optional[bool]:
        total = self.oracle_total
        return None if total is None else total == self.coker_dim

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "alpha": self.alpha.to_list(),
            "h0_dim": self.h0_dim,
            "h0_divisor_dim": self.h0_divisor_dim,
            "coker_dim": self.coker_dim,
            "missing": [p.to_list() for p in self.missing],
        }
        if self.per_eigenweight is not None:
            data["per_eigenweight"] = [
                {"u": u.to_list(), "h1": dim}
                for u, dim in sorted(self.per_eigenweight.items(), key=lambda item: item[0].coords)
            ]
            data["oracle_total"] = self.oracle_total
        return data


@dataclass
class StepReport:
    """
    One refinement step of a composed Levi projection check.

    :param batches: The refinement reached by this step.
    :param equal: Whether the image of the previous points is the step's point set.
    :param witnesses: Points of the step missing from the image.
    :param rhs: The step's points, the projected lattice points in the projected polytope.
    """

    batches: Tuple[int, ...]
    equal: bool
    witnesses: Tuple[Character, ...] = ()
    rhs: Tuple[Character, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "batches": list(self.batches),
            "equal": self.equal,
            "size": len(self.rhs),
            "witnesses": [p.to_list() for p in self.witnesses],
        }


@dataclass
class ProjectionReport:
    """
    Compares the projection of the lattice points with the lattice points of the projection.

    :param equal: Whether both sides coincide.
    :param lhs: Image of the polytope's lattice points.
    :param rhs: Points of the projected lattice inside the projected polytope.
    :param witnesses: Points of ``rhs`` missing from ``lhs``.
    :param label: Human readable Levi description.
    :param steps: Per-step results of the composed check, if run.
    :param composed_agrees: Whether the last composed step reproduces ``rhs``.
    """

    equal: bool
    lhs: LatticePointSet
    rhs: LatticePointSet
    witnesses: Tuple[Character, ...]
    label: str
    steps: Tuple[StepReport, ...] = ()
    composed_agrees: Optional[bool] = None

    @property
    def composed_equal(self) -> bool:
        return all(step.equal for step in self.steps) and self.composed_agrees is not False

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "levi": self.label,
            "equal": self.equal,
            "lhs": self.lhs.to_dict(),
            "rhs": self.rhs.to_dict(),
            "witnesses": [p.to_list() for p in self.witnesses],
        }
        if self.steps:
            data["steps"] = [step.to_dict() for step in self.steps]
            data["composed_agrees"] = self.composed_agrees
        return data


@dataclass
class SweepReport:
    """
    Outcome of a seeded property sweep.

    :param theorem: Name of the checked statement.
    :param instances: Number of checked instances.
    :param failures: One mapping per failed instance.
    :param elapsed: Wall time in seconds.
    """

    theorem: str
    instances: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        """No failures among at least one checked instance."""
        return self.instances > 0 and not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem,
            "instances": self.instances,
            "passed": self.passed,
            "failures": self.failures,
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }

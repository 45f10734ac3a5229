from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import sympy

from .fan import Fan, build_weyl_fan, cone_sign, divisor_subfan, locate_cone
from .lattice.models import Character, Cocharacter
from .root_system import RootDatum, pairing, parse_datum, project_along, project_along_root, weyl_orbit
from .utils.exceptions import (
    DivisorFormatError,
    FanError,
    InconsistentCoefficientsError,
    OrthogonalSetError,
    RootDatumError,
)
from .utils.serialization import parse_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ValidationResult:
    """
    Flags of an orthogonal set.

    :param valid: Every wall difference is an integer multiple of the wall root.
    :param positive: Valid and every multiple is non-negative.
    :param strictly_positive: Positive and all characters are distinct.
    :param failing_pair: First adjacent pair breaking validity or positivity.
    :param failing_cone: Cone whose character is outside the lattice.
    """

    valid: bool
    positive: bool
    strictly_positive: bool
    failing_pair: Optional[Tuple[str, str]] = None
    failing_cone: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "valid": self.valid,
            "positive": self.positive,
            "strictly_positive": self.strictly_positive,
            "failing_pair": list(self.failing_pair) if self.failing_pair else None,
            "failing_cone": self.failing_cone,
        }


class OrthogonalSet:
    """
    One character per maximal cone of a fan: an equivariant divisor D and its support
    function psi_D.

    :param fan: The fan (a Weyl fan or a root-hyperplane sub-fan).
    :param chars: Character of each maximal cone, keyed by cone id.
    :raises OrthogonalSetError: If a cone has no character or a character has the wrong length.
    """

    def __init__(self, fan: Fan, chars: Mapping[str, Character]) -> None:
        self.fan = fan
        for cone_id in chars:
            if cone_id not in fan.cones:
                raise OrthogonalSetError(f"{cone_id!r} is not a maximal cone of {fan.name}", cone_id=cone_id)
        missing = [cone_id for cone_id in fan.cones if cone_id not in chars]
        if missing:
            raise OrthogonalSetError(f"No character for cone {missing[0]!r}", cone_id=missing[0])

        self.chars: Dict[str, Character] = {}
        for cone_id in fan.cones:
            u = chars[cone_id]
            if len(u) != fan.datum.n:
                raise OrthogonalSetError(
                    f"Character of cone {cone_id!r} has {len(u)} coordinates, expected {fan.datum.n}",
                    cone_id=cone_id,
                )
            self.chars[cone_id] = u

    @property
    def datum(self) -> RootDatum:
        return self.fan.datum

    @property
    def degree(self) -> Fraction:
        """Common coordinate sum of the characters."""
        return next(iter(self.chars.values())).total

    def __getitem__(self, cone_id: str) -> Character:
        return self.chars[cone_id]

    def __iter__(self) -> Iterator[str]:
        return iter(self.chars)

    def __len__(self) -> int:
        return len(self.chars)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrthogonalSet):
            return NotImplemented
        return self.fan.name == other.fan.name and self.chars == other.chars

    def __hash__(self) -> int:
        return hash((self.fan.name, tuple(self.chars.items())))

    def __repr__(self) -> str:
        return f"OrthogonalSet({self.fan.name}, {len(self.chars)} cones)"

    def _combine(self, other: OrthogonalSet, sign: int) -> OrthogonalSet:
        if self.fan is not other.fan and self.fan.name != other.fan.name:
            raise OrthogonalSetError(f"Cannot combine sets on {self.fan.name} and {other.fan.name}")
        return OrthogonalSet(self.fan, {k: u + other[k] * sign for k, u in self.chars.items()})

    def __add__(self, other: OrthogonalSet) -> OrthogonalSet:
        return self._combine(other, 1)

    def __sub__(self, other: OrthogonalSet) -> OrthogonalSet:
        return self._combine(other, -1)

    def __neg__(self) -> OrthogonalSet:
        return OrthogonalSet(self.fan, {k: -u for k, u in self.chars.items()})

    @property
    def vertices(self) -> List[Character]:
        """Distinct characters in cone order."""
        seen: List[Character] = []
        for u in self.chars.values():
            if u not in seen:
                seen.append(u)
        return seen

    def to_dict(self) -> Dict[str, Any]:
        return {
            "datum": self.datum.name,
            "chars": {cone_id: u.to_list() for cone_id, u in self.chars.items()},
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], fan: Optional[Fan] = None) -> OrthogonalSet:
        """
        Read ``{"datum": "SL:3", "chars": {"<cone-id>": [1, 0, -1], ...}}``.

        :param data: Parsed JSON.
        :param fan: Fan to attach the set to; the Weyl fan of ``data["datum"]`` by default.
        :raises DivisorFormatError: On a malformed document.
        """
        if not isinstance(data, Mapping) or "chars" not in data:
            raise DivisorFormatError("Divisor document needs a 'chars' mapping")
        if fan is None:
            if "datum" not in data:
                raise DivisorFormatError("Divisor document needs a 'datum' field")
            try:
                fan = build_weyl_fan(parse_datum(str(data["datum"])))
            except RootDatumError as e:
                raise DivisorFormatError(str(e)) from e
        elif "datum" in data and str(data["datum"]).upper() != fan.datum.name.upper():
            raise DivisorFormatError(f"Divisor is for {data['datum']}, expected {fan.datum.name}")

        raw = data["chars"]
        if not isinstance(raw, Mapping):
            raise DivisorFormatError("'chars' must map cone ids to coordinate lists")

        chars: Dict[str, Character] = {}
        for cone_id, coords in raw.items():
            if cone_id not in fan.cones:
                raise DivisorFormatError(f"Unknown cone id {cone_id!r} for {fan.name}", cone_id=cone_id)
            try:
                u = Character(parse_vector(coords))
            except (TypeError, ValueError) as e:
                raise DivisorFormatError(f"Cone {cone_id!r}: {e}", cone_id=cone_id) from e
            if len(u) != fan.datum.n:
                raise DivisorFormatError(
                    f"Cone {cone_id!r}: expected {fan.datum.n} coordinates, got {len(u)}", cone_id=cone_id
                )
            chars[cone_id] = u
        for cone_id in fan.cones:
            if cone_id not in chars:
                raise DivisorFormatError(f"Missing character for cone {cone_id!r}", cone_id=cone_id)

        return cls(fan, chars)


def wall_multiple(difference: Character, root: Character) -> Optional[Fraction]:
    """The scalar k with difference = k * root, or None when there is none."""
    pivot = next(i for i, c in enumerate(root.coords) if c != 0)
    k = difference[pivot] / root[pivot]
    return k if difference == root * k else None


def wall_multiples(os: OrthogonalSet) -> Iterator[Tuple[str, str, Character, Optional[Fraction]]]:
    """
    For every ordered adjacent pair (a, b), the scalar k with u(a) - u(b) = k * root,
    where root is the wall root positive on a; k is None when no such scalar exists.
    """
    for cone_id, entries in os.fan.adjacency.items():
        for adjacency in entries:
            difference = os[cone_id] - os[adjacency.neighbor]
            yield cone_id, adjacency.neighbor, adjacency.root, wall_multiple(difference, adjacency.root)


def _lattice_failure(os: OrthogonalSet) -> Optional[str]:
    if os.fan.hyperplane is not None:
        return None
    for cone_id, u in os.chars.items():
        if not u.is_integral or (os.datum.sum_zero and u.total != 0):
            return cone_id
    return None


def validate(os: OrthogonalSet) -> ValidationResult:
    """
    Check the wall condition on every adjacent pair.

    :return: The valid, positive and strictly positive flags with the first offending pair.
    """
    failing_cone = _lattice_failure(os)
    if failing_cone is not None:
        return ValidationResult(False, False, False, failing_cone=failing_cone)

    negative: Optional[Tuple[str, str]] = None
    for first, second, _, k in wall_multiples(os):
        if k is None or k.denominator != 1:
            return ValidationResult(False, False, False, failing_pair=(first, second))
        if k < 0 and negative is None:
            negative = (first, second)

    if negative is not None:
        return ValidationResult(True, False, False, failing_pair=negative)
    distinct = len(set(os.chars.values())) == len(os.chars)
    return ValidationResult(True, True, distinct)


def require_valid(os: OrthogonalSet, positive: bool = False) -> ValidationResult:
    """
    :raises OrthogonalSetError: With the failing pair when the set is invalid (or not positive).
    """
    result = validate(os)
    if not result.valid or (positive and not result.positive):
        what = "valid" if not result.valid else "positive"
        where = result.failing_pair or result.failing_cone
        raise OrthogonalSetError(
            f"Orthogonal set on {os.fan.name} is not {what} (at {where})",
            pair=result.failing_pair,
            cone_id=result.failing_cone,
        )
    return result


def from_weyl_orbit(datum: RootDatum, mu: Character, fan: Optional[Fan] = None) -> OrthogonalSet:
    """
    Orthogonal set of the Weyl orbit of ``mu``: each chamber gets the orbit element
    dominant for it, i.e. maximal against an interior point of the chamber.
    """
    fan = fan or build_weyl_fan(datum)
    orbit = weyl_orbit(datum, mu)
    chars: Dict[str, Character] = {}
    for cone_id, cone in fan.cones.items():
        interior = [sum(r.canonical[i] for r in cone.rays) for i in range(datum.n)]
        chars[cone_id] = max(orbit, key=lambda u: (u.dot(interior), u.coords))
    return OrthogonalSet(fan, chars)


def evaluate_psi(os: OrthogonalSet, v: Sequence) -> Fraction:
    """Value of the support function psi_D at ``v``."""
    point = _canonical(v)
    return os[locate_cone(os.fan, point)].dot(point)


def _canonical(v: Sequence) -> Tuple[Fraction, ...]:
    values = tuple(Fraction(x) for x in (v.canonical if isinstance(v, Cocharacter) else v))
    shift = values[-1]
    return tuple(x - shift for x in values)


def ray_coefficients(os: OrthogonalSet) -> Dict[Cocharacter, Fraction]:
    """
    The coefficient a_rho = <u(sigma), v_rho> of each ray, for any cone sigma containing it.

    :raises OrthogonalSetError: If two cones through a ray disagree.
    """
    coefficients: Dict[Cocharacter, Fraction] = {}
    for ray, cone_ids in os.fan.ray_cones.items():
        values = {pairing(ray, os[cone_id]) for cone_id in cone_ids}
        if len(values) != 1:
            raise OrthogonalSetError(
                f"Cones {', '.join(cone_ids)} disagree on ray {ray}", pair=(cone_ids[0], cone_ids[1])
            )
        coefficients[ray] = values.pop()
    return coefficients


def ray_divisor(os: OrthogonalSet) -> Dict[Cocharacter, Fraction]:
    """D = sum of a_rho D_rho, as a mapping from rays to non-zero coefficients."""
    return {ray: a for ray, a in ray_coefficients(os).items() if a != 0}


def d_alpha_ray_divisor(fan: Fan, alpha: Character) -> Dict[Cocharacter, Fraction]:
    """The divisor sum over rays with <alpha, v_rho> > 0 of <alpha, v_rho> D_rho."""
    alpha = fan.datum.require_root(alpha)
    return {ray: pairing(ray, alpha) for ray in fan.rays if pairing(ray, alpha) > 0}


@lru_cache(maxsize=None)
def _character_solver(fan: Fan, cone_id: str) -> Tuple[Tuple[Fraction, ...], ...]:
    cone = fan.cones[cone_id]
    rows = [list(ray.canonical) for ray in cone.rays]
    rows.append([1] * fan.datum.n)
    inverse = sympy.Matrix(rows).inv()
    return tuple(
        tuple(Fraction(int(x.p), int(x.q)) for x in inverse.row(i))
        for i in range(inverse.rows)
    )


def from_ray_coefficients(
        fan: Fan,
        coefficients: Mapping[Cocharacter, Any],
        degree: Any = 0,
) -> OrthogonalSet:
    """
    Solve <u(sigma), v_rho> = a_rho on every maximal cone, with coordinate sum ``degree``.

    :param fan: A Weyl fan.
    :param coefficients: Coefficient of every ray.
    :param degree: Coordinate sum of the characters; must be 0 for SL_n and G2.
    :raises InconsistentCoefficientsError: On a missing ray or a non-integral solution.
    """
    if fan.hyperplane is not None:
        raise FanError("Ray coefficients are inverted on Weyl fans only")
    degree = Fraction(degree)
    if fan.datum.sum_zero and degree != 0:
        raise InconsistentCoefficientsError(f"{fan.datum.name} characters have coordinate sum 0")

    chars: Dict[str, Character] = {}
    for cone_id in fan.cones:
        u = character_on_cone(fan, cone_id, coefficients, degree)
        if not u.is_integral:
            raise InconsistentCoefficientsError(f"No integral character on cone {cone_id!r}: {u}")
        chars[cone_id] = u
    return OrthogonalSet(fan, chars)


def character_on_cone(fan: Fan, cone_id: str, coefficients: Mapping[Cocharacter, Any], degree: Any) -> Character:
    """
    The character u with <u, v_rho> = a_rho on the rays of one maximal cone of a Weyl fan
    and coordinate sum ``degree``.

    :raises InconsistentCoefficientsError: If a ray of the cone has no coefficient.
    """
    try:
        values = [Fraction(coefficients[ray]) for ray in fan.cones[cone_id].rays]
    except KeyError as e:
        raise InconsistentCoefficientsError(f"No coefficient for ray {e.args[0]}")
    target = values + [Fraction(degree)]
    return Character(tuple(
        sum((a * b for a, b in zip(row, target)), Fraction(0)) for row in _character_solver(fan, cone_id)
    ))


def is_convex(os: OrthogonalSet) -> bool:
    """
    Whether psi_D is convex, i.e. <u(sigma), v_rho> <= psi_D(v_rho) for every maximal cone
    sigma and every ray rho of the fan.
    """
    coefficients = ray_coefficients(os)
    for u in os.chars.values():
        for ray, a in coefficients.items():
            if pairing(ray, u) > a:
                return False
    return True


def constant_set(fan: Fan, u: Character) -> OrthogonalSet:
    return OrthogonalSet(fan, {cone_id: u for cone_id in fan.cones})


def d_alpha_set(fan: Fan, alpha: Character) -> OrthogonalSet:
    """The set of D_alpha: alpha on cones where alpha >= 0, zero elsewhere."""
    alpha = fan.datum.require_root(alpha)
    zero = Character.zero(fan.datum.n)
    return OrthogonalSet(
        fan, {cone_id: alpha if cone_sign(fan, cone_id, alpha) > 0 else zero for cone_id in fan.cones}
    )


def subtract_d_alpha(os: OrthogonalSet, alpha: Character) -> OrthogonalSet:
    """
    Orthogonal set of D - D_alpha.

    :raises RootDatumError: If ``alpha`` is not a root.
    """
    if os.fan.hyperplane is not None:
        raise FanError("D_alpha is subtracted on Weyl fans only")
    return os - d_alpha_set(os.fan, alpha)


def shift(os: OrthogonalSet, u: Character) -> OrthogonalSet:
    """Translate every character by -u."""
    if len(u) != os.datum.n:
        raise RootDatumError(f"Cannot shift by {u}: expected {os.datum.n} coordinates")
    return OrthogonalSet(os.fan, {cone_id: v - u for cone_id, v in os.chars.items()})


def restrict_to_divisor(os: OrthogonalSet, beta: Character) -> OrthogonalSet:
    """
    Restrict to D_beta: each wall of [beta = 0] gets the projection p_beta of the
    character of either adjacent cone (both project to the same point).

    On a sub-fan ``beta`` is one of its wall roots and p_beta the orthogonal projection,
    so restrictions compose.
    """
    subfan = divisor_subfan(os.fan, beta)
    beta = subfan.hyperplane
    chars: Dict[str, Character] = {}
    for cone_id, (first, _) in subfan.parents.items():
        if os.fan.hyperplane is None:
            chars[cone_id] = project_along_root(os.datum, os[first], beta)
        else:
            chars[cone_id] = project_along(os[first], beta.coords)
    return OrthogonalSet(subfan, chars)


def max_increment(os: OrthogonalSet) -> Fraction:
    """Largest wall multiple of a valid set."""
    return max((k for *_, k in wall_multiples(os) if k is not None), default=Fraction(0))

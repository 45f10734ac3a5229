from __future__ import annotations

import itertools
import logging
import threading
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, partial
from typing import Any, Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import sympy
from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from .lattice.models import Character, Cocharacter
from .root_system import DatumKind, RootDatum, pairing, project_along, project_along_root
from .utils.exceptions import FanError

logger = logging.getLogger(__name__)

CACHE: LRUCache = LRUCache(maxsize=64)

G2_RAYS = (
    (1, 0, 0),
    (1, 0, -1),
    (0, 0, -1),
    (0, 1, -1),
    (0, 1, 0),
    (-1, 1, 0),
)


def canonical_vector(v: Sequence) -> Tuple[Fraction, ...]:
    """Representative of ``v`` modulo (1,...,1) with last coordinate 0."""
    values = tuple(Fraction(x) for x in v)
    shift = values[-1]
    return tuple(x - shift for x in values)


def _to_fraction(value: sympy.Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True, eq=False)
class Cone:
    """
    A simplicial cone given by its primitive ray generators.

    :param id: Stable identifier.
    :param rays: Ray generators.
    :param left_inverse: Exact left inverse of the ray matrix in canonical coordinates.
    """

    id: str
    rays: Tuple[Cocharacter, ...]
    left_inverse: Tuple[Tuple[Fraction, ...], ...] = field(default=(), repr=False)

    @classmethod
    def build(cls, cone_id: str, rays: Sequence[Cocharacter]) -> Cone:
        """
        :raises FanError: If the rays are linearly dependent.
        """
        rays = tuple(rays)
        size = len(rays[0]) - 1
        matrix = sympy.Matrix([[r.canonical[i] for r in rays] for i in range(size)])
        gram = matrix.T * matrix
        if gram.det() == 0:
            raise FanError(f"Rays of cone {cone_id} are linearly dependent")
        inverse = gram.inv() * matrix.T
        rows = tuple(
            tuple(_to_fraction(inverse[i, j]) for j in range(inverse.cols))
            for i in range(inverse.rows)
        )
        return cls(cone_id, rays, rows)

    @property
    def dim(self) -> int:
        return len(self.rays)

    def coefficients(self, v: Sequence) -> Optional[Tuple[Fraction, ...]]:
        """
        Coordinates of ``v`` in the ray basis, or None when ``v`` is outside the span.
        """
        point = canonical_vector(v)
        head = point[:-1]
        coefficients = tuple(sum((a * x for a, x in zip(row, head)), Fraction(0)) for row in self.left_inverse)
        for i, x in enumerate(point):
            if sum((c * r.canonical[i] for c, r in zip(coefficients, self.rays)), Fraction(0)) != x:
                return None
        return coefficients

    def contains(self, v: Sequence) -> bool:
        coefficients = self.coefficients(v)
        return coefficients is not None and all(c >= 0 for c in coefficients)

    def to_dict(self) -> Dict[str, Any]:
        return {"id": self.id, "rays": [r.to_list() for r in self.rays]}


@dataclass(frozen=True, eq=False)
class Adjacency:
    """
    A neighbor across a wall.

    :param neighbor: Id of the neighboring maximal cone.
    :param shared: Rays of the common facet.
    :param root: The wall root, positive on the cone and negative on the neighbor.
    :param coroot: Coroot of the wall root, on Weyl fans.
    """

    neighbor: str
    shared: Tuple[Cocharacter, ...]
    root: Character
    coroot: Optional[Cocharacter] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "neighbor": self.neighbor,
            "shared": [r.to_list() for r in self.shared],
            "root": self.root.to_list(),
        }
        if self.coroot is not None:
            data["coroot"] = self.coroot.to_list()
        return data


class Fan:
    """
    A complete simplicial fan: the Weyl fan of V_G, or a sub-fan lying in one or more
    root hyperplanes.

    :param datum: The root datum.
    :param cones: Maximal cones, in a fixed order.
    :param wall_roots: Characters from which wall roots are chosen.
    :param hyperplanes: Characters whose hyperplanes carry a sub-fan, outermost first.
    :param parents: For a sub-fan, the two cones of the parent fan meeting in each cone,
        the one on the positive side first.
    """

    def __init__(
            self,
            datum: RootDatum,
            cones: Sequence[Cone],
            wall_roots: Sequence[Character],
            hyperplanes: Sequence[Character] = (),
            parents: Optional[Mapping[str, Tuple[str, str]]] = None,
    ) -> None:
        self.datum = datum
        self.cones: Dict[str, Cone] = {cone.id: cone for cone in cones}
        self.wall_roots = tuple(wall_roots)
        self.hyperplanes = tuple(hyperplanes)
        self.parents: Dict[str, Tuple[str, str]] = dict(parents or {})
        self.rank = cones[0].dim

        rays: List[Cocharacter] = []
        ray_cones: Dict[Cocharacter, List[str]] = defaultdict(list)
        for cone in cones:
            for ray in cone.rays:
                if ray not in ray_cones:
                    rays.append(ray)
                ray_cones[ray].append(cone.id)
        self.rays = tuple(rays)
        self.ray_cones: Dict[Cocharacter, Tuple[str, ...]] = {r: tuple(ids) for r, ids in ray_cones.items()}

        self.walls = self._walls()
        self.adjacency = self._adjacency()
        self.graph = nx.Graph()
        self.graph.add_nodes_from(self.cones)
        for cone_id, neighbors in self.adjacency.items():
            for adjacency in neighbors:
                self.graph.add_edge(cone_id, adjacency.neighbor)

        logger.debug("Built fan %s: %d rays, %d maximal cones", self.name, len(self.rays), len(self.cones))

    @property
    def hyperplane(self) -> Optional[Character]:
        """The innermost hyperplane of a sub-fan, None for a Weyl fan."""
        return self.hyperplanes[-1] if self.hyperplanes else None

    @property
    def name(self) -> str:
        return self.datum.name + "".join(f"[{h}=0]" for h in self.hyperplanes)

    def __repr__(self) -> str:
        return f"Fan({self.name})"

    def cone(self, cone_id: str) -> Cone:
        """
        :raises FanError: If ``cone_id`` is not a maximal cone.
        """
        try:
            return self.cones[cone_id]
        except KeyError:
            raise FanError(f"{cone_id!r} is not a maximal cone of {self.name}")

    def _walls(self) -> Dict[FrozenSet[Cocharacter], Tuple[str, ...]]:
        walls: Dict[FrozenSet[Cocharacter], List[str]] = defaultdict(list)
        for cone in self.cones.values():
            for facet in itertools.combinations(cone.rays, self.rank - 1):
                walls[frozenset(facet)].append(cone.id)
        for facet, ids in walls.items():
            if len(ids) != 2:
                raise FanError(f"Facet {sorted(map(str, facet))} of {self.name} lies in {len(ids)} cones")
        return {facet: tuple(ids) for facet, ids in walls.items()}

    def _wall_root(self, cone: Cone, shared: FrozenSet[Cocharacter]) -> Character:
        extra = next(r for r in cone.rays if r not in shared)
        candidates = [
            root for root in self.wall_roots
            if pairing(extra, root) > 0 and all(pairing(r, root) == 0 for r in shared)
        ]
        if not candidates:
            raise FanError(f"No wall root separates cone {cone.id} of {self.name}")
        return min(candidates, key=lambda root: (root.dot(root), root.coords))

    def _adjacency(self) -> Dict[str, Tuple[Adjacency, ...]]:
        adjacency: Dict[str, List[Adjacency]] = {cone_id: [] for cone_id in self.cones}
        for facet, (first, second) in self.walls.items():
            for cone_id, neighbor in ((first, second), (second, first)):
                cone = self.cones[cone_id]
                root = self._wall_root(cone, facet)
                coroot = self.datum.coroots.get(root) if self.hyperplane is None else None
                shared = tuple(r for r in cone.rays if r in facet)
                adjacency[cone_id].append(Adjacency(neighbor, shared, root, coroot))
        order = {cone_id: index for index, cone_id in enumerate(self.cones)}
        return {
            cone_id: tuple(sorted(entries, key=lambda a: order[a.neighbor]))
            for cone_id, entries in adjacency.items()
        }

    @cached_property
    def faces(self) -> Dict[FrozenSet[Cocharacter], Tuple[str, ...]]:
        """All non-zero cones of the fan, keyed by ray set, with the maximal cones containing them."""
        faces: Dict[FrozenSet[Cocharacter], List[str]] = defaultdict(list)
        for cone in self.cones.values():
            for size in range(1, cone.dim + 1):
                for subset in itertools.combinations(cone.rays, size):
                    faces[frozenset(subset)].append(cone.id)
        return {face: tuple(ids) for face, ids in faces.items()}

    def determinant(self, cone_id: str) -> int:
        """Determinant of the ray matrix of a maximal cone of a Weyl fan."""
        cone = self.cone(cone_id)
        size = len(cone.rays[0]) - 1
        matrix = sympy.Matrix([[r.canonical[i] for r in cone.rays] for i in range(size)])
        return int(matrix.det())

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "datum": self.datum.name,
            "rays": [r.to_list() for r in self.rays],
            "cones": [cone.to_dict() for cone in self.cones.values()],
            "adjacency": [
                dict(cone=cone_id, **entry.to_dict())
                for cone_id, entries in self.adjacency.items()
                for entry in entries
            ],
        }
        if self.hyperplane is not None:
            data["hyperplane"] = self.hyperplane.to_list()
        return data


def _type_a_cones(n: int) -> List[Cone]:
    cones = []
    for ordering in itertools.permutations(range(n), n - 1):
        coords = [0] * n
        rays = []
        for index in ordering:
            coords[index] = 1
            rays.append(Cocharacter(tuple(coords)))
        cones.append(Cone.build("-".join(str(i + 1) for i in ordering), rays))
    return cones


def _g2_cones() -> List[Cone]:
    rays = [Cocharacter(r) for r in G2_RAYS] + [-Cocharacter(r) for r in G2_RAYS]
    return [Cone.build(str(i + 1), (rays[i], rays[(i + 1) % 12])) for i in range(12)]


@cached(cache=CACHE, key=lambda datum: hashkey(datum.name), lock=threading.RLock())
def build_weyl_fan(datum: RootDatum) -> Fan:
    """
    Build the Weyl fan of V_G.

    GL_n and SL_n chambers are indexed by orderings (i_1, ..., i_{n-1}) with rays
    L_{i_1}, L_{i_1} + L_{i_2}, ...; the G2 fan has the twelve cones (v_i, v_{i+1}).

    :param datum: Root datum from ``build_root_datum``.
    :return: The fan, cached per datum.
    """
    cones = _g2_cones() if datum.kind == DatumKind.G2 else _type_a_cones(datum.n)
    return Fan(datum, cones, datum.roots)


def locate_cone(fan: Fan, v: Sequence) -> str:
    """
    Id of the first maximal cone containing ``v``.

    :raises FanError: If ``v`` is outside the support (possible only for sub-fans).
    """
    for cone in fan.cones.values():
        if cone.contains(v):
            return cone.id
    raise FanError(f"{tuple(map(str, v))} is not in the support of {fan.name}")


def adjacent_cones(fan: Fan, cone_id: str) -> List[Tuple[str, Tuple[Cocharacter, ...], Optional[Cocharacter]]]:
    """
    Neighbors of a maximal cone as (neighbor id, shared rays, wall coroot).

    :raises FanError: If ``cone_id`` is not maximal.
    """
    fan.cone(cone_id)
    return [(a.neighbor, a.shared, a.coroot) for a in fan.adjacency[cone_id]]


def cone_sign(fan: Fan, cone_id: str, alpha: Character) -> int:
    """
    Side of [alpha = 0] a cone lies on: +1, -1, or 0 for a cone inside the hyperplane.

    :raises FanError: If alpha changes sign on the cone.
    """
    values = [pairing(ray, alpha) for ray in fan.cone(cone_id).rays]
    if all(x >= 0 for x in values) and any(x > 0 for x in values):
        return 1
    if all(x <= 0 for x in values) and any(x < 0 for x in values):
        return -1
    if all(x == 0 for x in values):
        return 0
    raise FanError(f"Cone {cone_id} of {fan.name} straddles [{alpha}=0]")


def divisor_subfan(fan: Fan, alpha: Character) -> Fan:
    """
    The sub-fan of cones lying in the hyperplane [alpha = 0].

    Its maximal cones are the walls inside the hyperplane. A wall between Weyl chambers a
    and b gets id "a|b" with a on the side alpha >= 0; walls of a sub-fan get "(a)|(b)".
    Wall roots of the result are the wall roots of ``fan`` projected along ``alpha``.

    :param fan: A Weyl fan, or a sub-fan when ``alpha`` is one of its wall roots.
    :raises FanError: If ``alpha`` is not a wall root of the sub-fan ``fan``.
    :raises RootDatumError: If ``alpha`` is not a root of a Weyl fan's datum.
    """
    datum = fan.datum
    if fan.hyperplane is None:
        alpha = datum.require_root(alpha)
        project = partial(project_along_root, datum, alpha=alpha)
        template = "{}|{}"
    else:
        alpha = alpha if isinstance(alpha, Character) else Character(tuple(alpha))
        if alpha not in fan.wall_roots:
            raise FanError(f"{alpha} is not a wall root of {fan.name}")
        project = partial(project_along, direction=alpha.coords)
        template = "({})|({})"

    cones: List[Cone] = []
    parents: Dict[str, Tuple[str, str]] = {}
    for facet, (first, second) in fan.walls.items():
        if any(pairing(ray, alpha) != 0 for ray in facet):
            continue
        if cone_sign(fan, first, alpha) < 0:
            first, second = second, first
        rays = tuple(r for r in fan.cones[first].rays if r in facet)
        cone_id = template.format(first, second)
        parents[cone_id] = (first, second)
        cones.append(Cone.build(cone_id, rays))

    order = {cone_id: index for index, cone_id in enumerate(fan.cones)}
    cones.sort(key=lambda c: tuple(order[part] for part in parents[c.id]))

    wall_roots: List[Character] = []
    for beta in fan.wall_roots:
        projected = project(beta)
        if not projected.is_zero and projected not in wall_roots:
            wall_roots.append(projected)

    return Fan(datum, cones, wall_roots, fan.hyperplanes + (alpha,), parents)


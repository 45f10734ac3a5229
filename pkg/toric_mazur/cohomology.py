from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Set, Tuple

import networkx as nx

from .divisor import OrthogonalSet, is_convex, ray_coefficients, require_valid, subtract_d_alpha
from .lattice.enumeration import Halfspace, box_points, ceil_fraction, fiber_interval, floor_fraction, satisfies
from .lattice.models import Character, Cocharacter, CohomologyReport, LatticePointSet, LatticeTag
from .root_system import pairing, project_along_root
from .utils.exceptions import FanError, NotConvexError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Polytope:
    """
    Integral data of the polytope of a globally generated divisor.

    :param vertices: The characters u(sigma) as integer tuples.
    :param halfspaces: One inequality <u, v_rho> <= a_rho per ray.
    :param degree: Coordinate sum shared by every point.
    """

    vertices: Tuple[Tuple[int, ...], ...]
    halfspaces: Tuple[Halfspace, ...]
    degree: int

    @property
    def lower(self) -> List[int]:
        return [min(v[i] for v in self.vertices) for i in range(len(self.vertices[0]))]

    @property
    def upper(self) -> List[int]:
        return [max(v[i] for v in self.vertices) for i in range(len(self.vertices[0]))]


def polytope(os: OrthogonalSet) -> Polytope:
    """
    :raises OrthogonalSetError: If the set is invalid.
    :raises NotConvexError: If psi_D is not convex.
    """
    if os.fan.hyperplane is not None:
        raise FanError("Polytopes are computed for divisors on Weyl fans")
    require_valid(os)
    if not is_convex(os):
        raise NotConvexError(f"psi_D of the divisor on {os.fan.name} is not convex")
    coefficients = ray_coefficients(os)
    halfspaces = tuple(Halfspace(ray.canonical, int(a)) for ray, a in coefficients.items())
    vertices = tuple(u.as_ints() for u in os.vertices)
    return Polytope(vertices, halfspaces, int(os.degree))


def h0_points(os: OrthogonalSet) -> LatticePointSet:
    """
    Lattice points of the polytope of D, a basis of H^0(V_G, O(D)).

    :param os: A valid orthogonal set with convex psi_D.
    :return: Integral u with <u, v_rho> <= <u(sigma), v_rho> for every cone and ray.
    :raises NotConvexError: If psi_D is not convex.
    """
    data = polytope(os)
    points = [
        Character(p) for p in box_points(data.lower, data.upper, data.degree)
        if satisfies(p, data.halfspaces)
    ]
    logger.debug("H0 of divisor on %s: %d points", os.fan.name, len(points))
    return LatticePointSet.from_points(points)


def projected_h0_points(os: OrthogonalSet, alpha: Character) -> LatticePointSet:
    """
    Points of p_alpha(lattice) inside p_alpha(Conv u(sigma)), a basis of H^0(D_alpha, O(D)).

    Candidates are p_alpha(z) for integral z with <alpha^v, z> in {0, 1}; membership of y
    is decided on the fiber line y + t alpha. Coordinates are doubled internally.

    :raises NotConvexError: If psi_D is not convex.
    :raises RootDatumError: If ``alpha`` is not a root.
    """
    datum = os.datum
    alpha = datum.require_root(alpha)
    data = polytope(os)
    coroot = datum.coroot(alpha).canonical
    root = alpha.as_ints()

    def doubled(z: Tuple[int, ...], k: int) -> Tuple[int, ...]:
        return tuple(2 * x - k * a for x, a in zip(z, root))

    vertices = [doubled(v, sum(c * x for c, x in zip(coroot, v))) for v in data.vertices]
    lower = [min(v[i] for v in vertices) for i in range(datum.n)]
    upper = [max(v[i] for v in vertices) for i in range(datum.n)]
    halfspaces = [Halfspace(h.normal, 2 * h.bound) for h in data.halfspaces]

    z_lower = [floor_fraction(Fraction(lo, 2)) - abs(a) for lo, a in zip(lower, root)]
    z_upper = [ceil_fraction(Fraction(hi, 2)) + abs(a) for hi, a in zip(upper, root)]

    seen: Set[Tuple[int, ...]] = set()
    points: List[Character] = []
    for z in box_points(z_lower, z_upper, data.degree):
        k = sum(c * x for c, x in zip(coroot, z))
        if k not in (0, 1):
            continue
        y = doubled(z, k)
        if y in seen or any(not lo <= x <= hi for x, lo, hi in zip(y, lower, upper)):
            continue
        seen.add(y)
        if not fiber_interval(y, root, halfspaces).is_empty:
            points.append(Character(tuple(Fraction(x, 2) for x in y)))

    logger.debug("Projected H0 along %s on %s: %d points", alpha, os.fan.name, len(points))
    return LatticePointSet.from_points(points, LatticeTag.PROJECTED, alpha=alpha)


def fiber_points(os: OrthogonalSet, direction: Character, candidates: Iterable[Character]) -> List[Character]:
    """
    Candidates y whose fiber line y + t direction meets the polytope of ``os``.

    The polytope is cut out by <u, v_rho> <= a_rho over the rays of the fan of ``os``, so
    the set may live on a sub-fan; candidates and ``direction`` are taken in its span.

    :raises NotConvexError: If psi_D is not convex.
    """
    if not is_convex(os):
        raise NotConvexError(f"psi_D of the divisor on {os.fan.name} is not convex")
    halfspaces = [Halfspace(ray.canonical, a) for ray, a in ray_coefficients(os).items()]
    return [y for y in candidates if not fiber_interval(y.coords, direction.coords, halfspaces).is_empty]


def phi_cokernel_dim(os: OrthogonalSet, alpha: Character, oracle: bool = False) -> CohomologyReport:
    """
    Dimension of the cokernel of H^0(V_G, O(D)) -> H^0(D_alpha, O(D)), which is
    dim H^1(V_G, J_{D_alpha} (x) O(D)).

    :param os: A valid orthogonal set with convex psi_D.
    :param alpha: A root.
    :param oracle: Also compute the topological H^1 of D - D_alpha per eigenweight.
    :return: The report, with the unreached projected points in ``missing``.
    """
    alpha = os.datum.require_root(alpha)
    full = h0_points(os)
    projected = projected_h0_points(os, alpha)
    image = {project_along_root(os.datum, u, alpha) for u in full}

    stray = image - projected.as_set()
    if stray:
        logger.warning("Projection of %d points falls outside the projected polytope", len(stray))

    missing = tuple(p for p in projected if p not in image)
    per_eigenweight = h1_eigenweights(os, alpha) if oracle else None
    return CohomologyReport(
        h0_dim=len(full),
        h0_divisor_dim=len(projected),
        coker_dim=len(missing),
        missing=missing,
        alpha=alpha,
        per_eigenweight=per_eigenweight,
    )


def _component_excess(os: OrthogonalSet, coefficients: Mapping[Cocharacter, Fraction], u: Character) -> int:
    graph = nx.Graph()
    for ray, a in coefficients.items():
        if a - pairing(ray, u) < 0:
            cones = os.fan.ray_cones[ray]
            graph.add_nodes_from(cones)
            nx.add_path(graph, cones)
    if graph.number_of_nodes() == 0:
        return 0
    return max(0, nx.number_connected_components(graph) - 1)


def h1_eigenspace_dim_topological(os_minus: OrthogonalSet, u: Character) -> int:
    """
    Topological H^1 in eigenweight u: one less than the number of connected components of
    U = {v : psi(v) - <u, v> < 0}, or 0 when U is empty.

    A cone meets U iff one of its rays is negative; two such cones lie in one component
    when they share a negative ray.

    :param os_minus: Any valid orthogonal set, typically D - D_alpha.
    :param u: The eigenweight.
    """
    return _component_excess(os_minus, ray_coefficients(os_minus), u)


def h1_eigenweights(os: OrthogonalSet, alpha: Character) -> Dict[Character, int]:
    """
    Non-zero topological H^1 dimensions of D - D_alpha over all eigenweights.

    Only u with u or u + alpha near the polytope of D can contribute, so the scan covers
    the vertex box of D widened by |alpha_i| in each coordinate.
    """
    alpha = os.datum.require_root(alpha)
    data = polytope(os)
    os_minus = subtract_d_alpha(os, alpha)
    coefficients = ray_coefficients(os_minus)
    root = alpha.as_ints()

    lower = [lo - abs(a) for lo, a in zip(data.lower, root)]
    upper = [hi + abs(a) for hi, a in zip(data.upper, root)]

    dims: Dict[Character, int] = {}
    for point in box_points(lower, upper, data.degree):
        u = Character(point)
        dim = _component_excess(os_minus, coefficients, u)
        if dim:
            dims[u] = dim
    return dims


def h1_total_topological(os: OrthogonalSet, alpha: Character) -> int:
    """Sum of the topological H^1 of D - D_alpha over all eigenweights."""
    return sum(h1_eigenweights(os, alpha).values())


@dataclass(frozen=True)
class ZeroEigenspaceConditions:
    """
    Ray-sign conditions on psi_D at eigenweight 0.

    :param negative_below: {psi_D < 0} meets [alpha <= 0].
    :param negative_above: {psi_D < 0} meets [alpha >= 0].
    :param shifted_negative_above: {psi_{D - D_alpha} < 0} meets [alpha >= 0].
    """

    negative_below: bool
    negative_above: bool
    shifted_negative_above: bool

    @property
    def cond_i(self) -> bool:
        return not self.negative_below

    @property
    def cond_ii(self) -> bool:
        return self.negative_above and self.negative_below

    @property
    def reduction_applies(self) -> bool:
        """psi_D is negative below the wall and nowhere above it."""
        return self.negative_below and not self.negative_above

    @property
    def reduction_holds(self) -> bool:
        return not self.reduction_applies or not self.shifted_negative_above

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cond_i": self.cond_i,
            "cond_ii": self.cond_ii,
            "negative_below": self.negative_below,
            "negative_above": self.negative_above,
            "shifted_negative_above": self.shifted_negative_above,
        }


def check_lemma31_conditions(os: OrthogonalSet, alpha: Character) -> ZeroEigenspaceConditions:
    """
    Decide the emptiness conditions by ray signs. Root hyperplanes are unions of cones and
    psi is linear on cones, so a set {psi < 0} meets a half-space iff some ray in that
    half-space has a negative value.
    """
    alpha = os.datum.require_root(alpha)
    polytope(os)
    coefficients = ray_coefficients(os)

    negative_below = negative_above = shifted = False
    for ray, a in coefficients.items():
        side = pairing(ray, alpha)
        if side <= 0 and a < 0:
            negative_below = True
        if side >= 0 and a < 0:
            negative_above = True
        if side >= 0 and a - side < 0:
            shifted = True
    return ZeroEigenspaceConditions(negative_below, negative_above, shifted)

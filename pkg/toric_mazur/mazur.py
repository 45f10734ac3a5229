from __future__ import annotations

import itertools
import logging
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .cohomology import (
    check_lemma31_conditions,
    fiber_points,
    h0_points,
    h1_eigenspace_dim_topological,
    phi_cokernel_dim,
    polytope,
    projected_h0_points,
)
from .divisor import (
    OrthogonalSet,
    character_on_cone,
    constant_set,
    from_ray_coefficients,
    from_weyl_orbit,
    is_convex,
    ray_coefficients,
    require_valid,
    restrict_to_divisor,
    subtract_d_alpha,
    validate,
    wall_multiple,
)
from .fan import Fan, build_weyl_fan
from .lattice.enumeration import box_points, hull_halfspaces, satisfies
from .lattice.models import (
    Character,
    Cocharacter,
    CohomologyReport,
    LatticePointSet,
    LatticeTag,
    ProjectionReport,
    StepReport,
    SweepReport,
)
from .root_system import (
    DatumKind,
    RootDatum,
    build_root_datum,
    check_batches,
    is_dominant,
    levi_directions,
    pairing,
    parse_datum,
    pr_levi,
    project_along,
    project_along_root,
    root_lattice_contains,
    roots_e,
)
from .utils.exceptions import LeviSpecError, RootDatumError


logger = logging.getLogger(__name__)

SHORT_ROOT = Character.of(1, -1, 0)
LONG_ROOT = Character.of(2, -1, -1)

COUNTEREXAMPLE_UPPER = Character.of(1, 0, -1)
COUNTEREXAMPLE_LOWER = Character.of(0, -1, 1)
COUNTEREXAMPLE_UPPER_CONES = ("1", "2", "3", "4", "5", "12")

# Cone ids carrying each orbit element in the G2 case data, negatives on the opposite cones
CASE_PATTERNS = {
    "ab": ((("2", "3"), ("8", "9"), (1, 1, -2)),
           (("4", "5"), ("10", "11"), (-1, 2, -1)),
           (("6", "7"), ("12", "1"), (-2, 1, 1))),
    "cd": ((("1", "2"), ("7", "8"), (1, 0, -1)),
           (("3", "4"), ("9", "10"), (0, 1, -1)),
           (("5", "6"), ("11", "12"), (-1, 1, 0))),
}
CASES = {
    "a": ("ab", SHORT_ROOT, 4),
    "b": ("ab", LONG_ROOT, 6),
    "c": ("cd", SHORT_ROOT, 2),
    "d": ("cd", LONG_ROOT, 4),
}

# Rejected growths before a random positive set falls back to a constant set
MAX_ATTEMPTS = 200


@dataclass(frozen=True)
class LeviSpec:
    """
    A Levi subgroup: GL_{n_1} x ... x GL_{n_r} given by batches, or the semisimple rank 1
    Levi of a single root.

    :param batches: Positive batch sizes summing to n.
    :param root: The root of a rank 1 Levi.
    """

    batches: Optional[Tuple[int, ...]] = None
    root: Optional[Character] = None

    @classmethod
    def of_batches(cls, batches: Sequence[int]) -> LeviSpec:
        return cls(batches=tuple(batches))

    @classmethod
    def of_root(cls, alpha: Sequence) -> LeviSpec:
        return cls(root=alpha if isinstance(alpha, Character) else Character(tuple(alpha)))

    @property
    def label(self) -> str:
        if self.root is not None:
            return f"root {self.root}"
        return "batches " + ",".join(map(str, self.batches or ()))

    def validate(self, datum: RootDatum) -> LeviSpec:
        """
        :raises LeviSpecError: On a batch mismatch or a non-root.
        """
        if (self.batches is None) == (self.root is None):
            raise LeviSpecError("A Levi spec takes either batches or a root")
        if self.root is not None:
            if not datum.is_root(self.root):
                raise LeviSpecError(f"{self.root} is not a root of {datum.name}")
            return self
        if datum.kind != DatumKind.GL:
            raise LeviSpecError(f"Batches describe Levi subgroups of GL_n, not {datum.name}")
        if any(isinstance(b, bool) or not isinstance(b, int) or b < 1 for b in self.batches):
            raise LeviSpecError(f"Batches must be positive integers, got {self.batches}")
        if sum(self.batches) != datum.n:
            raise LeviSpecError(f"Batches {self.batches} do not sum to {datum.n}")
        return self

    def project(self, datum: RootDatum, u: Character) -> Character:
        if self.root is not None:
            return project_along_root(datum, u, self.root)
        return pr_levi(datum, u, self.batches)

    def refinements(self) -> List[Tuple[int, ...]]:
        """
        The chain of batch compositions that merges one coordinate at a time, from
        singletons to ``batches``; consecutive entries differ by one projection.
        """
        if self.batches is None:
            return []
        chain: List[Tuple[int, ...]] = []
        current = [1] * sum(self.batches)
        position = 0
        for size in self.batches:
            for _ in range(size - 1):
                current[position:position + 2] = [current[position] + current[position + 1]]
                chain.append(tuple(current))
            position += 1
        return chain


def compositions(n: int) -> Iterator[Tuple[int, ...]]:
    """All ordered tuples of positive integers summing to n."""
    for cuts in itertools.product((False, True), repeat=n - 1):
        parts, size = [], 1
        for cut in cuts:
            if cut:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        yield tuple(parts)


def compute_P_mu(datum: RootDatum, mu: Character) -> LatticePointSet:
    """
    Integral points of Conv(W mu) congruent to mu modulo the root lattice.

    :raises RootDatumError: If ``mu`` is not integral and dominant.
    """
    mu = datum.character(mu)
    if not is_dominant(datum, mu):
        raise RootDatumError(f"{mu} is not dominant for {datum.name}")
    os = from_weyl_orbit(datum, mu)
    return LatticePointSet.from_points(p for p in h0_points(os) if root_lattice_contains(datum, p - mu))


def _block_sums(v: Sequence, batches: Tuple[int, ...]) -> Tuple[int, ...]:
    starts = list(itertools.accumulate((0,) + batches))
    return tuple(int(sum(v[starts[k]:starts[k + 1]])) for k in range(len(batches)))


def _spread(sums: Sequence[int], batches: Tuple[int, ...]) -> Character:
    coords: List[Fraction] = []
    for total, size in zip(sums, batches):
        coords.extend([Fraction(total, size)] * size)
    return Character(tuple(coords))


def _sum_box(vertex_sums: Sequence[Tuple[int, ...]], degree: int) -> Iterator[Tuple[int, ...]]:
    lower = [min(s[k] for s in vertex_sums) for k in range(len(vertex_sums[0]))]
    upper = [max(s[k] for s in vertex_sums) for k in range(len(vertex_sums[0]))]
    return box_points(lower, upper, degree)


def levi_h0_points(os: OrthogonalSet, batches: Sequence[int]) -> LatticePointSet:
    """
    Points of pr_M(lattice) inside pr_M(Conv u(sigma)).

    A batch-constant vector is determined by its batch sums, so the projected polytope is
    the cdd hull of the vertex batch sums and the candidates are its integral points.

    :raises RootDatumError: On a non-GL datum or a batch mismatch.
    """
    batches = check_batches(os.datum, batches)
    data = polytope(os)
    vertex_sums = [_block_sums(v, batches) for v in data.vertices]
    hull = hull_halfspaces(vertex_sums)
    logger.debug("Levi polytope for batches %s: %d half-spaces", batches, len(hull))
    points = [_spread(sums, batches) for sums in _sum_box(vertex_sums, data.degree) if satisfies(sums, hull)]
    return LatticePointSet.from_points(points, LatticeTag.LEVI, batches=batches)


def verify_composed(os: OrthogonalSet, spec: LeviSpec) -> Tuple[StepReport, ...]:
    """
    Check the projection equality as a chain of rank 1 projections along the Levi
    directions, one refinement at a time.

    The first step is the projection along a root. Every later step works on D restricted
    to the divisors of the earlier steps: its points are the projected lattice points whose
    fiber line meets the restricted polytope, and its image is the previous step's points
    projected along one more direction.
    """
    datum = os.datum
    spec.validate(datum)
    if spec.batches is None:
        return ()
    data = polytope(os)
    directions = levi_directions(datum, spec.batches)
    restricted = os
    previous = list(h0_points(os))
    steps: List[StepReport] = []
    for index, (batches, direction) in enumerate(zip(spec.refinements(), directions)):
        if index == 0:
            rhs = set(projected_h0_points(os, direction))
        else:
            restricted = restrict_to_divisor(restricted, directions[index - 1])
            vertex_sums = [_block_sums(v, batches) for v in data.vertices]
            candidates = (_spread(sums, batches) for sums in _sum_box(vertex_sums, data.degree))
            rhs = set(fiber_points(restricted, direction, candidates))
        image = {project_along(u, direction.coords) for u in previous}
        points = LatticePointSet.from_points(rhs, LatticeTag.LEVI, batches=batches)
        witnesses = tuple(p for p in points if p not in image)
        steps.append(StepReport(batches, not witnesses and image <= rhs, witnesses, points.points))
        logger.debug("Composed step %s on %s: %d points", batches, restricted.fan.name, len(points))
        previous = list(points)
    return tuple(steps)


def verify_projection_equality(os: OrthogonalSet, spec: LeviSpec, composed: bool = False) -> ProjectionReport:
    """
    Compare pr_M(Conv(u) & X) with Conv(pr_M u) & pr_M(X).

    Equality needs both inclusions. With ``composed`` the chain of ``verify_composed`` runs
    as well and its last right-hand side must agree with the direct one.

    :param os: A positive orthogonal set.
    :param spec: The Levi subgroup, by batches (GL_n) or by a root.
    :param composed: Also run the refinement chain of ``verify_composed``.
    :raises OrthogonalSetError: If ``os`` is not positive.
    :raises LeviSpecError: If ``spec`` does not fit the datum.
    """
    datum = os.datum
    spec.validate(datum)
    require_valid(os, positive=True)

    full = h0_points(os)
    image = {spec.project(datum, u) for u in full}
    if spec.root is not None:
        rhs = projected_h0_points(os, spec.root)
        lhs = LatticePointSet.from_points(image, LatticeTag.PROJECTED, alpha=spec.root)
    else:
        rhs = levi_h0_points(os, spec.batches)
        lhs = LatticePointSet.from_points(image, LatticeTag.LEVI, batches=spec.batches)

    contained = lhs.as_set() <= rhs.as_set()
    if not contained:
        logger.warning("Projected points outside the projected polytope for %s", spec.label)
    witnesses = tuple(p for p in rhs if p not in lhs)
    steps = verify_composed(os, spec) if composed else ()
    agrees = set(steps[-1].rhs) == rhs.as_set() if steps else None
    return ProjectionReport(not witnesses and contained, lhs, rhs, witnesses, spec.label, steps, agrees)


def _random_character(datum: RootDatum, rng: random.Random, bound: int) -> Character:
    coords = [rng.randint(-bound, bound) for _ in range(datum.n - 1)]
    coords.append(-sum(coords) if datum.sum_zero else rng.randint(-bound, bound))
    return Character(tuple(coords))


def _shuffled(rng: random.Random, nodes: Iterable[str]) -> Iterator[str]:
    items = sorted(nodes)
    rng.shuffle(items)
    return iter(items)


def spanning_tree_order(fan: Fan, rng: random.Random) -> Tuple[str, List[Tuple[str, str]]]:
    """A random root cone and the edges of a random breadth-first spanning tree of the chamber graph."""
    start = rng.choice(list(fan.cones))
    edges = list(nx.bfs_edges(fan.graph, start, sort_neighbors=partial(_shuffled, rng)))
    return start, edges


def _admissible(
        fan: Fan,
        chars: Mapping[str, Character],
        placed: Mapping[str, Character],
        bound: int,
) -> bool:
    for cone_id, u in placed.items():
        for adjacency in fan.adjacency[cone_id]:
            other = placed.get(adjacency.neighbor, chars.get(adjacency.neighbor))
            if other is None:
                continue
            k = wall_multiple(u - other, adjacency.root)
            if k is None or k.denominator != 1 or not 0 <= k <= bound:
                return False
    return True


def grow_positive_set(
        fan: Fan,
        start: str,
        base: Character,
        edges: Sequence[Tuple[str, str]],
        bound: int,
        pick: Callable[[str, Dict[int, Character]], int],
) -> Optional[OrthogonalSet]:
    """
    Grow a positive set along spanning tree edges, starting from ``base`` on ``start``.

    Crossing from a placed cone into a new one subtracts k times the wall root, 0 <= k <= bound.
    The new cone brings one new ray; every cone whose rays are then all known gets its forced
    character, and k is admissible when every wall closed this way has a multiple in
    [0, bound]. ``pick`` chooses k among the admissible ones, given the new cone's
    candidate characters.

    :return: The set, or None on a cone without admissible k.
    """
    coefficients: Dict[Cocharacter, Fraction] = {ray: pairing(ray, base) for ray in fan.cone(start).rays}
    chars: Dict[str, Character] = {start: base}
    degree = base.total
    for parent, child in edges:
        if child in chars:
            continue
        root = next(a.root for a in fan.adjacency[parent] if a.neighbor == child)
        options: Dict[int, Tuple[Dict[Cocharacter, Fraction], Dict[str, Character]]] = {}
        for k in range(bound + 1):
            u = chars[parent] - root * k
            fresh = {ray: pairing(ray, u) for ray in fan.cones[child].rays if ray not in coefficients}
            known = {**coefficients, **fresh}
            placed = {child: u}
            for ray in fresh:
                for cone_id in fan.ray_cones[ray]:
                    if cone_id in chars or cone_id in placed:
                        continue
                    if all(r in known for r in fan.cones[cone_id].rays):
                        placed[cone_id] = character_on_cone(fan, cone_id, known, degree)
            if all(v.is_integral for v in placed.values()) and _admissible(fan, chars, placed, bound):
                options[k] = (fresh, placed)
        if not options:
            logger.debug("No admissible wall multiple into cone %s of %s", child, fan.name)
            return None
        fresh, placed = options[pick(child, {k: option[1][child] for k, option in options.items()})]
        coefficients.update(fresh)
        chars.update(placed)
    return OrthogonalSet(fan, chars)


def random_positive_orthogonal_set(
        datum: RootDatum,
        bound: int,
        seed: int,
        fan: Optional[Fan] = None,
) -> OrthogonalSet:
    """
    A random positive orthogonal set with wall multiples at most ``bound``.

    Each attempt draws a base character and a random spanning tree, then grows the set
    with uniformly chosen admissible multiples; attempts that reach a dead end are
    rejected. After ``MAX_ATTEMPTS`` the constant set of the last base is returned.

    :param datum: The root datum.
    :param bound: Largest allowed wall multiple, at least 0.
    :param seed: Seed of the generator; equal seeds give equal sets.
    """
    if bound < 0:
        raise ValueError(f"bound must be non-negative, got {bound}")
    rng = random.Random(seed)
    fan = fan or build_weyl_fan(datum)

    def pick(_: str, candidates: Dict[int, Character]) -> int:
        return rng.choice(sorted(candidates))

    base = _random_character(datum, rng, bound)
    for attempt in range(1, MAX_ATTEMPTS + 1):
        start, edges = spanning_tree_order(fan, rng)
        os = grow_positive_set(fan, start, base, edges, bound, pick)
        if os is not None:
            logger.debug("Positive set on %s for seed %d after %d attempts", fan.name, seed, attempt)
            return os
        base = _random_character(datum, rng, bound)

    logger.warning("No positive set on %s for seed %d, using a constant set", fan.name, seed)
    return constant_set(fan, base)


def random_orthogonal_set(datum: RootDatum, bound: int, seed: int, fan: Optional[Fan] = None) -> OrthogonalSet:
    """
    A random valid orthogonal set from random ray coefficients in [-bound, bound].
    The Weyl fans are unimodular, so every choice is integral.
    """
    rng = random.Random(seed)
    fan = fan or build_weyl_fan(datum)
    coefficients = {ray: rng.randint(-bound, bound) for ray in fan.rays}
    degree = 0 if datum.sum_zero else rng.randint(-bound, bound)
    return from_ray_coefficients(fan, coefficients, degree)


def perturbed_orthogonal_set(datum: RootDatum, bound: int, seed: int, fan: Optional[Fan] = None) -> OrthogonalSet:
    """A random positive set with the coefficient of one random ray moved by one."""
    rng = random.Random(seed)
    fan = fan or build_weyl_fan(datum)
    os = random_positive_orthogonal_set(datum, bound, rng.randrange(1 << 30), fan)
    coefficients = ray_coefficients(os)
    ray = rng.choice(fan.rays)
    coefficients[ray] += rng.choice((-1, 1))
    return from_ray_coefficients(fan, coefficients, os.degree)


def theorem_c_case(case: str, n: int) -> Tuple[OrthogonalSet, Character]:
    """
    The G2 Weyl-orbit sets with repeated characters, as literal data.

    :param case: "a" or "b" (orbit of n(2,-1,-1)), "c" or "d" (orbit of n(1,0,-1)).
    :param n: A positive integer.
    :return: The set and its root.
    """
    if case not in CASES:
        raise ValueError(f"Unknown case {case!r}; expected one of {', '.join(CASES)}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    pattern, alpha, _ = CASES[case]
    fan = build_weyl_fan(build_root_datum(DatumKind.G2))
    chars: Dict[str, Character] = {}
    for positive, negative, coords in CASE_PATTERNS[pattern]:
        u = Character(coords) * n
        chars.update({cone_id: u for cone_id in positive})
        chars.update({cone_id: -u for cone_id in negative})
    return OrthogonalSet(fan, chars), alpha


def counterexample_set() -> OrthogonalSet:
    fan = build_weyl_fan(build_root_datum(DatumKind.G2))
    return OrthogonalSet(fan, {
        cone_id: COUNTEREXAMPLE_UPPER if cone_id in COUNTEREXAMPLE_UPPER_CONES else COUNTEREXAMPLE_LOWER
        for cone_id in fan.cones
    })


def g2_counterexample() -> Tuple[OrthogonalSet, ProjectionReport, CohomologyReport]:
    """The positive G2 set on which the projection equality fails along (1,-1,0)."""
    os = counterexample_set()
    projection = verify_projection_equality(os, LeviSpec.of_root(SHORT_ROOT))
    cohomology = phi_cokernel_dim(os, SHORT_ROOT, oracle=True)
    return os, projection, cohomology


def _sweep(theorem: str, check: Callable[[SweepReport], None]) -> SweepReport:
    report = SweepReport(theorem)
    started = time.perf_counter()
    check(report)
    report.elapsed = time.perf_counter() - started
    if not report.instances:
        logger.warning("Sweep %s checked no instances", theorem)
    logger.info("Sweep %s: %d instances, %d failures", theorem, report.instances, len(report.failures))
    return report


def _data(names: Sequence[str]) -> List[RootDatum]:
    return [parse_datum(name) for name in names]


def sweep_theorem_a(max_coordinate: int = 6) -> SweepReport:
    """Projection equality for every dominant G2 weight (a, b, -a-b), a <= max_coordinate, both root lengths."""
    datum = build_root_datum(DatumKind.G2)

    def check(report: SweepReport) -> None:
        for a in range(max_coordinate + 1):
            for b in range(a + 1):
                mu = Character.of(a, b, -a - b)
                os = from_weyl_orbit(datum, mu)
                for alpha in (SHORT_ROOT, LONG_ROOT):
                    report.instances += 1
                    result = verify_projection_equality(os, LeviSpec.of_root(alpha))
                    if not result.equal:
                        report.failures.append({
                            "mu": mu.to_list(),
                            "alpha": alpha.to_list(),
                            "witnesses": [p.to_list() for p in result.witnesses],
                        })

    return _sweep("A", check)


def sweep_theorem_b(
        data: Sequence[str] = ("GL:3", "GL:4"),
        samples: int = 100,
        bound: int = 3,
        seed: int = 7,
        batches: Optional[Sequence[int]] = None,
) -> SweepReport:
    """Projection equality, direct and composed, for random positive GL_n sets and Levi batches."""

    def check(report: SweepReport) -> None:
        for datum in _data(data):
            specs = [LeviSpec.of_batches(batches)] if batches else [
                LeviSpec.of_batches(c) for c in compositions(datum.n)
            ]
            for index in range(samples):
                os = random_positive_orthogonal_set(datum, bound, seed + index)
                for spec in specs:
                    report.instances += 1
                    result = verify_projection_equality(os, spec, composed=True)
                    if not result.equal or not result.composed_equal:
                        report.failures.append({
                            "datum": datum.name,
                            "seed": seed + index,
                            "levi": spec.label,
                            "witnesses": [p.to_list() for p in result.witnesses],
                        })

    return _sweep("B", check)


def sweep_theorem_c(n_max: int = 10) -> SweepReport:
    """The four G2 cases for n = 1..n_max: orbit data, projected point count and surjectivity."""
    datum = build_root_datum(DatumKind.G2)

    def check(report: SweepReport) -> None:
        for case, (pattern, _, slope) in CASES.items():
            mu = LONG_ROOT if pattern == "ab" else COUNTEREXAMPLE_UPPER
            for n in range(1, n_max + 1):
                report.instances += 1
                os, alpha = theorem_c_case(case, n)
                result = phi_cokernel_dim(os, alpha)
                problems = []
                if os != from_weyl_orbit(datum, mu * n, os.fan):
                    problems.append("case data differs from the Weyl orbit")
                if result.h0_divisor_dim != slope * n + 1:
                    problems.append(f"{result.h0_divisor_dim} projected points, expected {slope * n + 1}")
                if result.coker_dim:
                    problems.append(f"cokernel of dimension {result.coker_dim}")
                if problems:
                    report.failures.append({"case": case, "n": n, "problems": problems})

    return _sweep("C", check)


def sweep_theorem_e(
        data: Sequence[str] = ("SL:3", "SL:4"),
        samples: int = 200,
        bound: int = 5,
        seed: int = 7,
) -> SweepReport:
    """Vanishing cokernel for random positive SL_n sets and every simple root."""

    def check(report: SweepReport) -> None:
        for datum in _data(data):
            for index in range(samples):
                os = random_positive_orthogonal_set(datum, bound, seed + index)
                for alpha in datum.simple_roots:
                    report.instances += 1
                    result = phi_cokernel_dim(os, alpha)
                    if result.coker_dim:
                        report.failures.append({
                            "datum": datum.name,
                            "seed": seed + index,
                            "alpha": alpha.to_list(),
                            "missing": [p.to_list() for p in result.missing],
                        })

    return _sweep("E", check)


def sweep_convexity(
        data: Sequence[str] = ("SL:3", "SL:4", "GL:3", "G2"),
        samples: int = 500,
        bound: int = 5,
        seed: int = 7,
) -> SweepReport:
    """Convex support function iff positive, over positive, random and perturbed sets."""
    generators = (random_positive_orthogonal_set, random_orthogonal_set, perturbed_orthogonal_set)

    def check(report: SweepReport) -> None:
        for datum in _data(data):
            for index in range(samples):
                os = generators[index % len(generators)](datum, bound, seed + index)
                report.instances += 1
                convex, positive = is_convex(os), validate(os).positive
                if convex != positive:
                    report.failures.append({
                        "datum": datum.name,
                        "seed": seed + index,
                        "convex": convex,
                        "positive": positive,
                    })

    return _sweep("convexity", check)


def _mixed_instances(samples: int, bound: int, seed: int) -> Iterator[Tuple[OrthogonalSet, Character, int]]:
    if samples < 1:
        return
    rng = random.Random(seed)
    sl3, g2 = build_root_datum(DatumKind.SL, 3), build_root_datum(DatumKind.G2)
    yield counterexample_set(), SHORT_ROOT, seed
    for index in range(1, samples):
        datum = sl3 if index % 2 else g2
        os = random_positive_orthogonal_set(datum, bound, seed + index)
        yield os, rng.choice(datum.roots), seed + index


def sweep_oracle(samples: int = 100, bound: int = 3, seed: int = 7) -> SweepReport:
    """Cokernel dimension against the summed topological H^1 on mixed SL_3 and G2 sets."""

    def check(report: SweepReport) -> None:
        for os, alpha, instance_seed in _mixed_instances(samples, bound, seed):
            report.instances += 1
            result = phi_cokernel_dim(os, alpha, oracle=True)
            if not result.oracle_agrees:
                report.failures.append({
                    "datum": os.datum.name,
                    "seed": instance_seed,
                    "alpha": alpha.to_list(),
                    "coker_dim": result.coker_dim,
                    "oracle_total": result.oracle_total,
                })

    return _sweep("oracle", check)


def sweep_lemma31(
        data: Sequence[str] = ("SL:3", "SL:4", "G2"),
        samples: int = 100,
        bound: int = 5,
        seed: int = 7,
) -> SweepReport:
    """
    Zero-eigenspace vanishing whenever a ray-sign condition holds, and for SL_n the
    reduction: negative below the wall and nowhere above it forces D - D_alpha to be
    non-negative above it.
    """

    def check(report: SweepReport) -> None:
        for datum in _data(data):
            zero = Character.zero(datum.n)
            for index in range(samples):
                os = random_positive_orthogonal_set(datum, bound, seed + index)
                for alpha in datum.positive_roots:
                    report.instances += 1
                    conditions = check_lemma31_conditions(os, alpha)
                    problems = []
                    if conditions.cond_i or conditions.cond_ii:
                        dim = h1_eigenspace_dim_topological(subtract_d_alpha(os, alpha), zero)
                        if dim:
                            problems.append(f"zero eigenspace of dimension {dim}")
                    if datum.kind == DatumKind.SL and not conditions.reduction_holds:
                        problems.append("reduction fails")
                    if problems:
                        report.failures.append({
                            "datum": datum.name,
                            "seed": seed + index,
                            "alpha": alpha.to_list(),
                            "conditions": conditions.to_dict(),
                            "problems": problems,
                        })

    return _sweep("lemma31", check)


def sweep_hexagon() -> SweepReport:
    """The SL_3 orbit of (1,0,-1): seven points and a surjective restriction for every root."""
    datum = build_root_datum(DatumKind.SL, 3)

    def check(report: SweepReport) -> None:
        os = from_weyl_orbit(datum, Character.of(1, 0, -1))
        report.instances += 1
        size = len(h0_points(os))
        if size != 7:
            report.failures.append({"problem": f"{size} lattice points, expected 7"})
        for alpha in datum.roots:
            report.instances += 1
            result = phi_cokernel_dim(os, alpha)
            if result.coker_dim:
                report.failures.append({
                    "alpha": alpha.to_list(),
                    "missing": [p.to_list() for p in result.missing],
                })

    return _sweep("hexagon", check)


def _dominant_weights(n: int, bound: int) -> Iterator[Character]:
    for coords in itertools.combinations_with_replacement(range(bound, -1, -1), n):
        yield Character(coords)


def sweep_proposition_11(data: Sequence[str] = ("GL:3", "GL:4"), bound: int = 3) -> SweepReport:
    """
    GL_n Weyl orbits: the projection of P_mu along each simple root is the set of
    projected lattice points in the projected hull.
    """

    def check(report: SweepReport) -> None:
        for datum in _data(data):
            for mu in _dominant_weights(datum.n, bound):
                os = from_weyl_orbit(datum, mu)
                points = compute_P_mu(datum, mu)
                for k in range(datum.n - 1):
                    alpha = roots_e(datum.n, k, k + 1)
                    report.instances += 1
                    result = verify_projection_equality(os, LeviSpec.of_root(alpha))
                    projected = {project_along_root(datum, p, alpha) for p in points}
                    if not result.equal or projected != result.rhs.as_set():
                        report.failures.append({
                            "datum": datum.name,
                            "mu": mu.to_list(),
                            "alpha": alpha.to_list(),
                            "witnesses": [p.to_list() for p in result.witnesses],
                        })

    return _sweep("prop11", check)


SWEEPS: Dict[str, Callable[..., SweepReport]] = {
    "A": sweep_theorem_a,
    "B": sweep_theorem_b,
    "C": sweep_theorem_c,
    "E": sweep_theorem_e,
    "convexity": sweep_convexity,
    "oracle": sweep_oracle,
    "lemma31": sweep_lemma31,
    "hexagon": sweep_hexagon,
    "prop11": sweep_proposition_11,
}


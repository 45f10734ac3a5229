from __future__ import annotations

import logging
import threading
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

import sympy
from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from .lattice.models import Character, Cocharacter
from .utils.exceptions import RootDatumError

logger = logging.getLogger(__name__)

# Root data are immutable, build each one once
CACHE: LRUCache = LRUCache(maxsize=64)

G2_SHORT_ROOTS = ((1, -1, 0), (1, 0, -1), (0, 1, -1))
G2_LONG_ROOTS = ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
G2_SIMPLE_ROOTS = ((1, -1, 0), (-1, 2, -1))
# Interior point of the standard G2 chamber
G2_REGULAR = (3, 2, 0)


class DatumKind(str, Enum):
    GL = "GL"
    SL = "SL"
    G2 = "G2"


@dataclass(frozen=True, eq=False)
class RootDatum:
    """
    Roots, simple roots and coroots of GL_n, SL_n or G2 in coordinates of Z^n.

    SL_n and G2 characters live in the sum-zero sublattice and their cocharacters in
    Z^n / Z(1,...,1); G2 uses n = 3.

    :param kind: Group type.
    :param n: Number of coordinates.
    :param roots: All roots.
    :param simple_roots: Simple roots of the standard chamber.
    :param coroots: Coroot of each root.
    """

    kind: DatumKind
    n: int
    roots: Tuple[Character, ...]
    simple_roots: Tuple[Character, ...]
    coroots: Dict[Character, Cocharacter]

    @property
    def name(self) -> str:
        if self.kind == DatumKind.G2:
            return "G2"
        return f"{self.kind.value}:{self.n}"

    @property
    def rank(self) -> int:
        """Dimension of the maximal cones of the Weyl fan."""
        return self.n - 1

    @property
    def sum_zero(self) -> bool:
        return self.kind != DatumKind.GL

    @property
    def regular_cocharacter(self) -> Tuple[int, ...]:
        """A cocharacter in the interior of the standard chamber."""
        if self.kind == DatumKind.G2:
            return G2_REGULAR
        return tuple(range(self.n - 1, -1, -1))

    @property
    def positive_roots(self) -> Tuple[Character, ...]:
        regular = self.regular_cocharacter
        return tuple(alpha for alpha in self.roots if alpha.dot(regular) > 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootDatum):
            return NotImplemented
        return self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"RootDatum({self.name})"

    def is_root(self, alpha: Character) -> bool:
        return alpha in self.coroots

    def require_root(self, alpha: Union[Character, Sequence]) -> Character:
        """
        :raises RootDatumError: If ``alpha`` is not a root of the datum.
        """
        if not isinstance(alpha, Character):
            alpha = Character(tuple(alpha))
        if alpha not in self.coroots:
            raise RootDatumError(f"{alpha} is not a root of {self.name}")
        return alpha

    def coroot(self, alpha: Character) -> Cocharacter:
        return self.coroots[self.require_root(alpha)]

    def character(self, values: Sequence, integral: bool = True) -> Character:
        """
        Build a character of this datum from coordinates.

        :param values: Coordinates.
        :param integral: Require integer coordinates.
        :raises RootDatumError: On a wrong length, a non-integral value or a non-zero sum.
        """
        try:
            u = values if isinstance(values, Character) else Character(tuple(values))
        except (TypeError, ValueError) as e:
            raise RootDatumError(str(e)) from e
        if len(u) != self.n:
            raise RootDatumError(f"{self.name} characters have {self.n} coordinates, got {len(u)}")
        if integral and not u.is_integral:
            raise RootDatumError(f"{u} is not integral")
        if self.sum_zero and u.total != 0:
            raise RootDatumError(f"{self.name} characters have coordinate sum 0, got {u}")
        return u


def _unit(n: int, i: int) -> List[int]:
    vector = [0] * n
    vector[i] = 1
    return vector


def _coroot(alpha: Character, quotient: bool) -> Cocharacter:
    scaled = [c * 2 / alpha.dot(alpha) for c in alpha.coords]
    if any(c.denominator != 1 for c in scaled):
        shift = scaled[-1]
        scaled = [c - shift for c in scaled]
    return Cocharacter(tuple(int(c) for c in scaled), quotient)


@cached(cache=CACHE, key=lambda kind, n: hashkey(kind.value, n), lock=threading.RLock())
def _build(kind: DatumKind, n: int) -> RootDatum:
    if kind == DatumKind.G2:
        positive = G2_SHORT_ROOTS + G2_LONG_ROOTS
        roots = [Character(r) for r in positive] + [-Character(r) for r in positive]
        simple = [Character(r) for r in G2_SIMPLE_ROOTS]
    else:
        roots = []
        for i in range(n):
            for j in range(n):
                if i != j:
                    roots.append(roots_e(n, i, j))
        simple = [roots_e(n, i, i + 1) for i in range(n - 1)]

    quotient = kind != DatumKind.GL
    coroots = {alpha: _coroot(alpha, quotient) for alpha in roots}

    logger.debug("Built root datum %s:%d with %d roots", kind.value, n, len(roots))
    return RootDatum(kind, n, tuple(roots), tuple(simple), coroots)


def roots_e(n: int, i: int, j: int) -> Character:
    """The root e_i - e_j (0-based indices)."""
    return Character(tuple(a - b for a, b in zip(_unit(n, i), _unit(n, j))))


def build_root_datum(kind: Union[str, DatumKind], n: Optional[int] = None) -> RootDatum:
    """
    Build (or fetch from cache) the root datum of GL_n, SL_n or G2.

    :param kind: "GL", "SL" or "G2" ("GLn" and "SLn" are accepted too).
    :param n: Number of coordinates, at least 2; ignored for G2.
    :raises RootDatumError: On an unknown kind or an invalid n.
    """
    label = kind.value if isinstance(kind, DatumKind) else str(kind).strip().upper()
    if label in ("GLN", "SLN"):
        label = label[:2]
    try:
        kind = DatumKind(label)
    except ValueError:
        raise RootDatumError(f"Unknown root datum kind {label!r}")

    if kind == DatumKind.G2:
        return _build(kind, 3)
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise RootDatumError(f"{kind.value}_n needs an integer n >= 2, got {n!r}")
    return _build(kind, n)


def parse_datum(text: str) -> RootDatum:
    """
    Parse "GL:4", "SL:3" or "G2".

    :raises RootDatumError: If the text names no supported datum.
    """
    label, _, size = text.strip().partition(":")
    if label.upper() == "G2":
        if size:
            raise RootDatumError(f"G2 takes no size, got {text!r}")
        return build_root_datum(DatumKind.G2)
    try:
        n = int(size)
    except ValueError:
        raise RootDatumError(f"Cannot parse root datum {text!r}; expected e.g. 'SL:3'")
    return build_root_datum(label, n)


def pairing(v: Cocharacter, u: Character) -> Fraction:
    """
    Evaluate the canonical pairing, using the canonical representative of ``v``.

    :raises RootDatumError: If the two live in spaces of different dimension.
    """
    if len(v) != len(u):
        raise RootDatumError(f"Cannot pair {v} with {u}: dimensions differ")
    return sum((Fraction(c) * x for c, x in zip(v.canonical, u.coords)), Fraction(0))


def reflect(datum: RootDatum, alpha: Character, u: Character) -> Character:
    """Apply the simple reflection s_alpha(u) = u - <alpha^v, u> alpha."""
    return u - alpha * pairing(datum.coroot(alpha), u)


def weyl_orbit(datum: RootDatum, mu: Character) -> FrozenSet[Character]:
    """
    Compute the Weyl orbit of ``mu`` as the closure under the simple reflections.

    :raises RootDatumError: If ``mu`` is not an integral character of the datum.
    """
    mu = datum.character(mu)
    seen = {mu}
    queue = deque([mu])
    while queue:
        u = queue.popleft()
        for alpha in datum.simple_roots:
            image = reflect(datum, alpha, u)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return frozenset(seen)


def project_along(u: Character, direction: Sequence) -> Character:
    """Orthogonal projection of ``u`` along ``direction``."""
    d = Character(tuple(direction))
    norm = d.dot(d)
    if norm == 0:
        return u
    return u - d * (u.dot(d) / norm)


def project_along_root(datum: RootDatum, u: Character, alpha: Character) -> Character:
    """
    The projection p_alpha(u) = u - (<alpha^v, u> / 2) alpha onto the hyperplane [alpha^v = 0].

    :raises RootDatumError: If ``alpha`` is not a root.
    """
    return u - alpha * (pairing(datum.coroot(alpha), u) / 2)


def check_batches(datum: RootDatum, batches: Sequence[int]) -> Tuple[int, ...]:
    if datum.kind != DatumKind.GL:
        raise RootDatumError(f"Levi projections by batches need GL_n, got {datum.name}")
    batches = tuple(batches)
    if not batches or any(isinstance(b, bool) or not isinstance(b, int) or b < 1 for b in batches):
        raise RootDatumError(f"Batches must be positive integers, got {batches}")
    if sum(batches) != datum.n:
        raise RootDatumError(f"Batches {batches} do not sum to {datum.n}")
    return batches


def levi_roots(datum: RootDatum, batches: Sequence[int]) -> List[Character]:
    """
    Simple roots e_j - e_{j+1} inside each batch, batch by batch.
    """
    batches = check_batches(datum, batches)
    roots: List[Character] = []
    start = 0
    for size in batches:
        roots.extend(roots_e(datum.n, j, j + 1) for j in range(start, start + size - 1))
        start += size
    return roots


def levi_directions(datum: RootDatum, batches: Sequence[int]) -> List[Character]:
    """
    Gram-Schmidt chain of the Levi simple roots. Projecting along these directions one
    after another averages the batches prefix by prefix and ends in ``pr_levi``.
    """
    directions: List[Character] = []
    for root in levi_roots(datum, batches):
        for d in directions:
            root = root - d * (root.dot(d) / d.dot(d))
        directions.append(root)
    return directions


def pr_levi(datum: RootDatum, u: Character, batches: Sequence[int]) -> Character:
    """
    Replace each batch of coordinates by its mean.

    :param datum: A GL_n datum.
    :param u: Character to project.
    :param batches: Positive batch sizes summing to n.
    :raises RootDatumError: On a non-GL datum or a batch mismatch.
    """
    batches = check_batches(datum, batches)
    coords: List[Fraction] = []
    start = 0
    for size in batches:
        block = u.coords[start:start + size]
        mean = sum(block, Fraction(0)) / size
        coords.extend([mean] * size)
        start += size
    return Character(tuple(coords))


def is_dominant(datum: RootDatum, u: Character) -> bool:
    """Dominance for the standard chamber: <alpha^v, u> >= 0 for all simple roots."""
    return all(pairing(datum.coroots[alpha], u) >= 0 for alpha in datum.simple_roots)


def root_lattice_contains(datum: RootDatum, u: Character) -> bool:
    """
    Whether ``u`` is an integral combination of the simple roots.
    """
    if len(u) != datum.n or not u.is_integral:
        return False
    matrix = sympy.Matrix([[int(alpha[i]) for alpha in datum.simple_roots] for i in range(datum.n)])
    target = sympy.Matrix([sympy.Integer(int(c)) for c in u.coords])
    try:
        solution, params = matrix.gauss_jordan_solve(target)
    except ValueError:
        return False
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return all(x.is_integer for x in solution)

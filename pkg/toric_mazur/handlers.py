from __future__ import annotations

import argparse
import json
import logging
from typing import Any, Dict, NamedTuple, Optional, Sequence

from .cohomology import h0_points, phi_cokernel_dim, projected_h0_points
from .divisor import OrthogonalSet, from_weyl_orbit
from .fan import build_weyl_fan, divisor_subfan
from .lattice.models import Character, SweepReport
from .mazur import (
    SWEEPS,
    LeviSpec,
    g2_counterexample,
    levi_h0_points,
    random_orthogonal_set,
    random_positive_orthogonal_set,
)
from .root_system import RootDatum, parse_datum
from .utils.config import Config
from .utils.exceptions import DivisorFormatError, RootDatumError
from .utils.serialization import parse_vector
from .utils.texts import ReportText

logger = logging.getLogger(__name__)


class Outcome(NamedTuple):
    """
    Result of a command handler.

    :param code: Process exit code.
    :param payload: JSON-ready structured output.
    :param text: Human readable output.
    """

    code: int
    payload: Dict[str, Any]
    text: str


def datum_type(value: str) -> RootDatum:
    try:
        return parse_datum(value)
    except RootDatumError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def vector_type(value: str) -> Character:
    try:
        return Character(parse_vector(value))
    except (TypeError, ValueError) as e:
        raise argparse.ArgumentTypeError(f"invalid vector {value!r}: {e}") from e


def non_negative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return number


def batches_type(value: str) -> tuple:
    try:
        return tuple(int(b) for b in value.split(",") if b.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid batches {value!r}") from e


def load_divisor(args: argparse.Namespace) -> OrthogonalSet:
    """
    Build the divisor named by ``--mu`` (Weyl orbit) or read it from ``--divisor``.

    :raises DivisorFormatError: If the file is missing or not JSON.
    """
    if getattr(args, "mu", None) is not None:
        if args.datum is None:
            raise DivisorFormatError("--mu needs --datum")
        return from_weyl_orbit(args.datum, args.datum.character(args.mu))

    try:
        with open(args.divisor, encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise DivisorFormatError(f"Cannot read {args.divisor}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise DivisorFormatError(f"{args.divisor} is not valid JSON: {e.msg}") from e

    fan = build_weyl_fan(args.datum) if args.datum is not None else None
    return OrthogonalSet.from_dict(data, fan)


class CommandHandlers:

    @staticmethod
    def fan_dump(args: argparse.Namespace, text: ReportText) -> Outcome:
        """
        Dump the Weyl fan of a datum, or the sub-fan of D_alpha with ``--alpha``.

        :param args: Parsed arguments.
        :param text: Report renderer.
        """
        fan = build_weyl_fan(args.datum)
        if args.alpha is not None:
            fan = divisor_subfan(fan, args.alpha)
        return Outcome(0, fan.to_dict(), text.fan(fan))

    @staticmethod
    def divisor_orbit(args: argparse.Namespace, text: ReportText) -> Outcome:
        """
        Emit the orthogonal set of the Weyl orbit of ``--mu``.
        """
        os = from_weyl_orbit(args.datum, args.datum.character(args.mu))
        return Outcome(0, os.to_dict(), text.divisor(os))

    @staticmethod
    def divisor_random(args: argparse.Namespace, text: ReportText) -> Outcome:
        """
        Emit a seeded random positive set, or a random valid one with ``--any``.
        """
        generate = random_orthogonal_set if args.any else random_positive_orthogonal_set
        os = generate(args.datum, args.bound, args.seed)
        return Outcome(0, os.to_dict(), text.divisor(os))

    @staticmethod
    def h0(args: argparse.Namespace, text: ReportText) -> Outcome:
        """
        Lattice points of the polytope of a divisor, of its projection along ``--alpha``
        or of its Levi projection for ``--batches``.
        """
        os = load_divisor(args)
        if args.alpha is not None:
            points = projected_h0_points(os, args.alpha)
        elif args.batches is not None:
            LeviSpec.of_batches(args.batches).validate(os.datum)
            points = levi_h0_points(os, args.batches)
        else:
            points = h0_points(os)
        return Outcome(0, points.to_dict(), text.point_set(points))

    @staticmethod
    def h1(args: argparse.Namespace, text: ReportText) -> Outcome:
        """
        H^1 of the ideal-sheaf twist along ``--alpha`` as a cokernel; with
        ``--oracle topological`` the per-eigenweight count is compared against it.
        """
        os = load_divisor(args)
        report = phi_cokernel_dim(os, args.alpha, oracle=args.oracle == "topological")
        code = 1 if report.oracle_agrees is False else 0
        return Outcome(code, report.to_dict(), text.cohomology(report))

    @staticmethod
    def verify(args: argparse.Namespace, text: ReportText) -> Outcome:
        """
        Run one theorem sweep. Exit code 1 when any instance fails or none was checked.
        """
        report: SweepReport = SWEEPS[args.theorem](**sweep_options(args))
        return Outcome(0 if report.passed else 1, report.to_dict(), text.sweep(report))

    @staticmethod
    def counterexample(args: argparse.Namespace, text: ReportText) -> Outcome:
        """
        Reproduce the G2 counterexample to the projection equality.
        """
        os, projection, cohomology = g2_counterexample()
        reproduced = not projection.equal and cohomology.coker_dim == 1 and bool(cohomology.oracle_agrees)
        payload = {
            "datum": os.datum.name,
            "alpha": cohomology.alpha.to_list(),
            "h0_dim": cohomology.h0_dim,
            "h0_divisor_dim": cohomology.h0_divisor_dim,
            "coker_dim": cohomology.coker_dim,
            "projection_equal": projection.equal,
            "witnesses": [p.to_list() for p in projection.witnesses],
            "divisor": os.to_dict(),
            "projection": projection.to_dict(),
            "cohomology": cohomology.to_dict(),
        }
        body = "\n".join([text.divisor(os), text.projection(projection), text.cohomology(cohomology)])
        return Outcome(0 if reproduced else 1, payload, body)

    def register(self, subparsers: Any, parents: Sequence[argparse.ArgumentParser], config: Config) -> None:
        """
        Register the command handlers as argparse sub-commands.

        :param subparsers: The object returned by ``add_subparsers``.
        :param parents: Parsers holding the shared output flags.
        :param config: Defaults for seeds and bounds.
        """
        fan = subparsers.add_parser("fan", help="Weyl fans").add_subparsers(dest="action", required=True)
        dump = fan.add_parser("dump", parents=parents, help="rays, maximal cones and walls")
        dump.add_argument("datum", type=datum_type)
        dump.add_argument("--alpha", type=vector_type, help="dump the sub-fan of D_alpha")
        dump.set_defaults(handler=self.fan_dump)

        divisor = subparsers.add_parser("divisor", help="orthogonal sets").add_subparsers(dest="action", required=True)
        orbit = divisor.add_parser("orbit", parents=parents, help="the set of a Weyl orbit")
        orbit.add_argument("--datum", type=datum_type, required=True)
        orbit.add_argument("--mu", type=vector_type, required=True)
        orbit.set_defaults(handler=self.divisor_orbit)

        random_ = divisor.add_parser("random", parents=parents, help="a seeded random set")
        random_.add_argument("--datum", type=datum_type, required=True)
        random_.add_argument("--bound", type=non_negative, default=config.DEFAULT_BOUND)
        random_.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
        random_.add_argument("--any", action="store_true", help="valid, not necessarily positive")
        random_.set_defaults(handler=self.divisor_random)

        h0 = subparsers.add_parser("h0", parents=parents, help="global sections as lattice points")
        _divisor_arguments(h0)
        projection = h0.add_mutually_exclusive_group()
        projection.add_argument("--alpha", type=vector_type, help="points of the projection along a root")
        projection.add_argument("--batches", type=batches_type, help="points of a Levi projection")
        h0.set_defaults(handler=self.h0)

        h1 = subparsers.add_parser("h1", parents=parents, help="H^1 of the ideal-sheaf twist")
        _divisor_arguments(h1)
        h1.add_argument("--alpha", type=vector_type, required=True)
        h1.add_argument("--oracle", choices=["topological"])
        h1.set_defaults(handler=self.h1)

        verify = subparsers.add_parser("verify", parents=parents, help="seeded theorem sweeps")
        verify.add_argument("--theorem", choices=list(SWEEPS), required=True)
        verify.add_argument("--datum", type=datum_type, action="append", dest="data", help="repeatable, e.g. GL:4")
        verify.add_argument("--batches", type=batches_type)
        verify.add_argument("--samples", type=non_negative)
        verify.add_argument("--bound", type=non_negative)
        verify.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
        verify.add_argument("--n-max", type=non_negative, dest="n_max")
        verify.add_argument("--max-coordinate", type=non_negative, dest="max_coordinate")
        verify.set_defaults(handler=self.verify, default_samples=config.DEFAULT_SAMPLES)

        counterexample = subparsers.add_parser("counterexample", parents=parents, help="the G2 counterexample")
        counterexample.set_defaults(handler=self.counterexample)


def _divisor_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--datum", type=datum_type)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--divisor", help="divisor JSON file")
    source.add_argument("--mu", type=vector_type, help="use the Weyl orbit of a weight")


# Sweep keyword arguments accepted per theorem
SWEEP_OPTIONS: Dict[str, Sequence[str]] = {
    "A": ("max_coordinate",),
    "B": ("data", "samples", "bound", "seed", "batches"),
    "C": ("n_max",),
    "E": ("data", "samples", "bound", "seed"),
    "convexity": ("data", "samples", "bound", "seed"),
    "oracle": ("samples", "bound", "seed"),
    "lemma31": ("data", "samples", "bound", "seed"),
    "hexagon": (),
    "prop11": ("data", "bound"),
}


def sweep_options(args: argparse.Namespace) -> Dict[str, Any]:
    """
    Keyword arguments for the sweep of ``args.theorem``. An unset ``--samples`` takes the
    configured default; other unset flags keep the sweep defaults.
    """
    options: Dict[str, Any] = {}
    for name in SWEEP_OPTIONS[args.theorem]:
        value: Optional[Any] = getattr(args, name, None)
        if name == "samples" and value is None:
            value = getattr(args, "default_samples", None)
        if value is None:
            continue
        if name == "data":
            value = tuple(datum.name for datum in value)
        options[name] = value
    ignored = [
        name for name in ("data", "samples", "bound", "batches", "n_max", "max_coordinate")
        if getattr(args, name, None) is not None and name not in SWEEP_OPTIONS[args.theorem]
    ]
    if ignored:
        logger.warning("Theorem %s ignores %s", args.theorem, ", ".join(ignored))
    return options


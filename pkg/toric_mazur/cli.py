from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence, TextIO

from .handlers import CommandHandlers
from .utils.config import Config
from .utils.exceptions import INPUT_ERRORS, DivisorFormatError, OrthogonalSetError
from .utils.serialization import dumps
from .utils.texts import ReportText

logger = logging.getLogger(__name__)


def build_parser(config: Config) -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--json", action="store_true", help="emit JSON instead of tables")
    output.add_argument("--style", choices=["plain", "markdown"], default=config.TEXT_STYLE)

    parser = argparse.ArgumentParser(
        prog="toric-mazur",
        description="Toric varieties of root systems and the converse to Mazur's inequality.",
    )
    subparsers = parser.add_subparsers(dest="verb", required=True)
    CommandHandlers().register(subparsers, [output], config)
    return parser


def _error_payload(error: Exception) -> dict:
    payload = {"error": type(error).__name__, "message": str(error)}
    if isinstance(error, (OrthogonalSetError, DivisorFormatError)) and error.cone_id is not None:
        payload["cone_id"] = error.cone_id
    if isinstance(error, OrthogonalSetError) and error.pair is not None:
        payload["pair"] = list(error.pair)
    return payload


def run_command(argv: Sequence[str], stdout: Optional[TextIO] = None, config: Optional[Config] = None) -> int:
    """
    Run one command.

    :param argv: Arguments without the program name.
    :param stdout: Stream for results, ``sys.stdout`` by default.
    :param config: Configuration, loaded from the environment by default.
    :return: 0 on success, 1 on a failed verification, 2 on an input error.
    """
    stdout = stdout or sys.stdout
    config = config or Config.load()
    parser = build_parser(config)
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return int(e.code or 0)

    text = ReportText(args.style)
    try:
        outcome = args.handler(args, text)
    except INPUT_ERRORS as e:
        logger.error("%s", e)
        if args.json:
            stdout.write(dumps(_error_payload(e)) + "\n")
        return 2

    stdout.write((dumps(outcome.payload) if args.json else outcome.text) + "\n")
    return outcome.code


def main() -> None:
    config = Config.load()
    logging.basicConfig(
        format="%(name)s:%(levelname)s:%(message)s",
        stream=sys.stderr,
        level=config.LOG_LEVEL,
    )
    sys.exit(run_command(sys.argv[1:], config=config))

from __future__ import annotations

import logging

from toric_mazur.mazur import SWEEPS
from toric_mazur.utils.config import Config
from toric_mazur.utils.texts import ReportText

# Reduced sizes; the command line runs the full sweeps
OPTIONS = {
    "A": {"max_coordinate": 3},
    "B": {"data": ("GL:3",), "samples": 20},
    "C": {"n_max": 5},
    "E": {"data": ("SL:3",), "samples": 20},
    "convexity": {"data": ("SL:3", "G2"), "samples": 50},
    "oracle": {"samples": 20},
    "lemma31": {"data": ("SL:3",), "samples": 20},
    "hexagon": {},
    "prop11": {"data": ("GL:3",), "bound": 2},
}


def main():
    config = Config.load()
    logging.basicConfig(level=config.LOG_LEVEL)
    text = ReportText(config.TEXT_STYLE)

    for theorem, sweep in SWEEPS.items():
        report = sweep(**OPTIONS[theorem])
        print(text.sweep(report))


if __name__ == '__main__':
    main()

from __future__ import annotations

import logging

from toric_mazur import Character, build_root_datum, from_weyl_orbit, phi_cokernel_dim
from toric_mazur.mazur import g2_counterexample
from toric_mazur.utils.config import Config
from toric_mazur.utils.texts import ReportText


def main():
    """
    Print the G2 counterexample, then a Weyl-orbit divisor on which restriction is surjective.
    """
    config = Config.load()
    logging.basicConfig(level=config.LOG_LEVEL)
    text = ReportText(config.TEXT_STYLE)

    # The positive set whose projection along the short root misses (0,0,0)
    os, projection, cohomology = g2_counterexample()
    print(text.divisor(os))
    print(text.projection(projection))
    print(text.cohomology(cohomology))

    # Weyl orbits never fail
    datum = build_root_datum("G2")
    orbit = from_weyl_orbit(datum, Character.of(2, -1, -1))
    print(text.cohomology(phi_cokernel_dim(orbit, Character.of(1, -1, 0), oracle=True)))


if __name__ == '__main__':
    main()

from __future__ import annotations

from dataclasses import dataclass

from environs import Env


@dataclass
class Config:
    """
    Configuration for the command line and the sweeps.

    Values are read from ``TORIC_MAZUR_*`` environment variables (a ``.env`` file is honored).
    """

    LOG_LEVEL: str
    DEFAULT_SEED: int
    DEFAULT_SAMPLES: int
    DEFAULT_BOUND: int
    TEXT_STYLE: str

    @classmethod
    def load(cls) -> Config:
        """
        Load configuration from environment variables.
        """
        env = Env()
        env.read_env()

        with env.prefixed("TORIC_MAZUR_"):
            return cls(
                LOG_LEVEL=env.str("LOG_LEVEL", "WARNING").upper(),
                DEFAULT_SEED=env.int("DEFAULT_SEED", 7),
                DEFAULT_SAMPLES=env.int("DEFAULT_SAMPLES", 100),
                DEFAULT_BOUND=env.int("DEFAULT_BOUND", 5),
                TEXT_STYLE=env.str("TEXT_STYLE", "plain"),
            )

"""Solver limits read from the environment."""

from __future__ import annotations

from functools import lru_cache

from dotenv import load_dotenv
from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from treepart.errors import SettingsError


load_dotenv()


class SolverSettings(BaseSettings):
    """Budgets and brute-force guards.

    Environment variables use the ``TREEPART_`` prefix, for example
    ``TREEPART_BUDGET=5000``.

    Attributes:
    ----------
    budget
        Largest number of binary refinements the partition-system solver enumerates.
    oracle_max_edges
        Largest edge count for which every edge subset is tried.
    oracle_max_leaves
        Largest leaf count for enumerating all trees on X.
    oracle_exist_max_leaves
        Largest leaf count for the brute-force common tree search.
    """

    budget: int = Field(default=1_000_000, gt=0)
    oracle_max_edges: int = Field(default=20, gt=0)
    oracle_max_leaves: int = Field(default=6, gt=0)
    oracle_exist_max_leaves: int = Field(default=5, gt=0)

    model_config = SettingsConfigDict(
        extra="ignore",
        env_prefix="TREEPART_",
    )


@lru_cache(maxsize=1)
def get_settings() -> SolverSettings:
    """Load the settings once per process.

    Raises:
        SettingsError: An environment variable does not validate.
    """
    try:
        return SolverSettings()
    except ValidationError as exc:
        msg = f"invalid solver settings: {exc.errors()[0]['msg']}"
        raise SettingsError(msg) from exc


__all__ = ["SolverSettings", "get_settings"]

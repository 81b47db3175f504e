"""Configuration loading for the treepart CLI."""

from __future__ import annotations

import logging
import os
import tomllib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from treepart.errors import SettingsError
from treepart.tracing import DEFAULT_TRACE_OUTPUT


logger = logging.getLogger(__name__)

FORMATS = ("text", "json")
EDGE_CHOICES = ("canonical", "min", "max")


@dataclass
class TreepartConfig:
    """Resolved configuration values for one CLI invocation."""

    budget: int | None = None  # None defers to SolverSettings
    format: str = "text"
    edges: str = "canonical"
    oracle: bool = False
    verbosity: int = 0
    addopts: list[str] = field(default_factory=list)
    trace_output: str = DEFAULT_TRACE_OUTPUT


DEFAULT_CONFIG = TreepartConfig()


def load_config(start_path: str | Path | None = None) -> TreepartConfig:
    """Load configuration from pyproject.toml, treepart.toml and the environment.

    Later sources win: ``[tool.treepart]`` in the nearest pyproject.toml, then the
    nearest treepart.toml, then ``TREEPART_BUDGET`` and ``TREEPART_FORMAT``.

    Raises:
        SettingsError: An environment override is not a valid value.
    """
    base = Path(start_path or Path.cwd()).resolve()
    config = TreepartConfig(
        budget=DEFAULT_CONFIG.budget,
        format=DEFAULT_CONFIG.format,
        edges=DEFAULT_CONFIG.edges,
        oracle=DEFAULT_CONFIG.oracle,
        verbosity=DEFAULT_CONFIG.verbosity,
        addopts=list(DEFAULT_CONFIG.addopts),
        trace_output=DEFAULT_CONFIG.trace_output,
    )

    pyproject = _find_file(base, "pyproject.toml")
    if pyproject:
        data = _load_toml(pyproject)
        section = data.get("tool", {}).get("treepart")
        if isinstance(section, dict):
            _apply_section(config, section)

    treepart_toml = _find_file(base, "treepart.toml")
    if treepart_toml:
        _apply_section(config, _load_toml(treepart_toml))

    env_budget = os.getenv("TREEPART_BUDGET")
    if env_budget:
        value = env_budget.strip()
        if not value.isdigit() or int(value) <= 0:
            msg = f"TREEPART_BUDGET must be a positive integer, got {env_budget!r}"
            raise SettingsError(msg)
        config.budget = int(value)

    env_format = os.getenv("TREEPART_FORMAT")
    if env_format:
        value = env_format.strip().lower()
        if value not in FORMATS:
            msg = f"TREEPART_FORMAT must be one of {', '.join(FORMATS)}, got {env_format!r}"
            raise SettingsError(msg)
        config.format = value

    return config


def _find_file(start: Path, filename: str) -> Path | None:
    """Search upwards from start for filename."""
    current = start
    while True:
        candidate = current / filename
        if candidate.exists():
            return candidate
        if current.parent == current:
            return None
        current = current.parent


def _load_toml(path: Path) -> dict[str, Any]:
    with path.open("rb") as fp:
        return tomllib.load(fp)


def _apply_section(config: TreepartConfig, section: dict[str, Any]) -> None:
    """Apply a single config section to the resolved config; bad values are ignored."""
    mapping = {
        "budget": "budget",
        "format": "format",
        "edges": "edges",
        "oracle": "oracle",
        "verbosity": "verbosity",
        "addopts": "addopts",
        "trace-output": "trace_output",
        "trace_output": "trace_output",
    }

    for key, value in section.items():
        attr = mapping.get(key)
        if attr is None:
            continue
        if attr == "budget":
            if isinstance(value, int) and not isinstance(value, bool) and value > 0:
                config.budget = value
            else:
                logger.warning("ignoring budget %r: not a positive integer", value)
        elif attr == "format":
            if value in FORMATS:
                config.format = value
        elif attr == "edges":
            if value in EDGE_CHOICES:
                config.edges = value
        elif attr == "oracle":
            if isinstance(value, bool):
                config.oracle = value
        elif attr == "verbosity":
            if isinstance(value, int) and not isinstance(value, bool):
                config.verbosity = value
        elif attr == "addopts":
            if isinstance(value, list):
                config.addopts = [str(v) for v in value]
        elif attr == "trace_output":
            if isinstance(value, str):
                config.trace_output = value


__all__ = ["DEFAULT_CONFIG", "EDGE_CHOICES", "FORMATS", "TreepartConfig", "load_config"]

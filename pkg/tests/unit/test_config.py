from pathlib import Path

import pytest

from treepart.config import load_config
from treepart.errors import SettingsError


def test_load_config_prefers_treepart_toml(tmp_path: Path):
    project = tmp_path
    pyproject = project / "pyproject.toml"
    pyproject.write_text(
        """
[tool.treepart]
budget = 5000
format = "json"
verbosity = 1
addopts = ["-q"]
""".strip()
    )
    treepart_file = project / "treepart.toml"
    treepart_file.write_text(
        """
budget = 20
edges = "min"
oracle = true
trace-output = ".treepart/custom.jsonl"
""".strip()
    )

    config = load_config(project)

    assert config.budget == 20
    assert config.format == "json"
    assert config.edges == "min"
    assert config.oracle is True
    assert config.verbosity == 1
    assert config.addopts == ["-q"]
    assert config.trace_output == ".treepart/custom.jsonl"


def test_load_config_defaults_when_missing(tmp_path: Path):
    config = load_config(tmp_path)
    assert config.budget is None
    assert config.format == "text"
    assert config.edges == "canonical"
    assert config.oracle is False
    assert config.verbosity == 0
    assert config.addopts == []
    assert config.trace_output == ".treepart/traces.jsonl"


@pytest.mark.parametrize(
    "field,expected",
    [
        ("budget", None),
        ("format", "text"),
        ("edges", "canonical"),
        ("oracle", False),
        ("verbosity", 0),
        ("addopts", []),
    ],
)
def test_config_default_values(tmp_path: Path, field: str, expected):
    config = load_config(tmp_path)
    assert getattr(config, field) == expected


def test_invalid_values_are_ignored(tmp_path: Path):
    (tmp_path / "treepart.toml").write_text(
        'budget = -1\nformat = "xml"\nedges = "all"\noracle = "yes"\n'
    )
    config = load_config(tmp_path)
    assert config.budget is None
    assert config.format == "text"
    assert config.edges == "canonical"
    assert config.oracle is False


def test_config_found_in_parent_directory(tmp_path: Path):
    (tmp_path / "treepart.toml").write_text("budget = 7\n")
    nested = tmp_path / "data" / "trees"
    nested.mkdir(parents=True)
    assert load_config(nested).budget == 7


def test_environment_wins(tmp_path: Path, monkeypatch):
    (tmp_path / "treepart.toml").write_text('budget = 7\nformat = "text"\n')
    monkeypatch.setenv("TREEPART_BUDGET", " 99 ")
    monkeypatch.setenv("TREEPART_FORMAT", "JSON")
    config = load_config(tmp_path)
    assert config.budget == 99
    assert config.format == "json"


@pytest.mark.parametrize(
    "name,value",
    [
        ("TREEPART_BUDGET", "0"),
        ("TREEPART_BUDGET", "lots"),
        ("TREEPART_FORMAT", "yaml"),
    ],
)
def test_invalid_environment(tmp_path: Path, monkeypatch, name: str, value: str):
    monkeypatch.setenv(name, value)
    with pytest.raises(SettingsError, match=name):
        load_config(tmp_path)

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from treepart.io import parse_newick
from treepart.systems import get_settings
from treepart.tree import RootedTree


settings.register_profile(
    "treepart",
    derandomize=True,
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("treepart")

SAMPLE_DATA = Path(__file__).parent / "sample_data"


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Drop cached solver settings so every test sees its own environment."""
    for name in ("TREEPART_BUDGET", "TREEPART_FORMAT"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def sample_data() -> Path:
    return SAMPLE_DATA


@pytest.fixture
def three_blocks_tree() -> RootedTree:
    """v0 root, v1 a, v2 (b,c), v3 b, v4 c, v5 (d,e), v6 d, v7 e."""
    return parse_newick("(a,(b,c),(d,e));")


@pytest.fixture
def two_cherries_tree() -> RootedTree:
    """v1 (a,(b,c)), v2 a, v3 (b,c), v6 (d,(e,f)), v8 (e,f), v11 g."""
    return parse_newick("((a,(b,c)),(d,(e,f)),g);")

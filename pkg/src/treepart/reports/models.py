"""Report models shared by the console and JSON reporters.

Every command produces exactly one report instance; both output formats
render that instance, so text and JSON always carry the same verdict.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from treepart.tree.rooted import EdgeRef, RootedTree


class EdgeReport(BaseModel):
    """An edge named by the vertex below it and the leaves below that vertex."""

    model_config = ConfigDict(frozen=True)

    vertex: int
    cluster: list[str]

    @classmethod
    def of(cls, t: RootedTree, edge: EdgeRef) -> EdgeReport:
        return cls(vertex=edge, cluster=sorted(t.leaves_below(edge)))

    def __str__(self) -> str:
        return f"v{self.vertex} {{{','.join(self.cluster)}}}"


class RefusalReport(BaseModel):
    """An edge on paths inside two blocks; no refinement can help."""

    edge: EdgeReport
    first: list[str]
    second: list[str]


class UnresolvedReport(BaseModel):
    """A block whose leaves need a new cluster below ``vertex``."""

    vertex: int
    block: list[str]


class ColoredEdgeReport(BaseModel):
    edge: EdgeReport
    colors: list[int]


class Report(BaseModel):
    """Fields every report carries."""

    command: str
    status: str
    exit_code: int
    messages: list[str] = Field(default_factory=list)


class CheckReport(Report):
    command: Literal["check"] = "check"
    tree: str
    partition: str
    unrooted: bool = False
    edge_choice: str = "canonical"
    edges: list[EdgeReport] | None = None
    unresolved: list[UnresolvedReport] = Field(default_factory=list)
    refined: str | None = None
    refine: bool = False
    refusal: RefusalReport | None = None
    oracle_checked: bool = False


class CutReport(Report):
    command: Literal["cut"] = "cut"
    tree: str
    edges: list[EdgeReport]
    partition: str


class SplitsReport(Report):
    command: Literal["splits"] = "splits"
    partition: str | None = None
    splits: list[str] | None = None
    tree_like: bool | None = None
    incompatible_pair: list[str] | None = None
    oracle_checked: bool = False


class SystemReport(Report):
    command: Literal["system"] = "system"
    members: list[str]
    tree: str | None = None
    result: str | None = None
    candidates: int | None = None
    budget: int | None = None
    oracle_checked: bool = False


class FitchReport(Report):
    command: Literal["fitch"] = "fitch"
    colors: list[int]
    tree: str | None = None
    edge_colors: list[ColoredEdgeReport] = Field(default_factory=list)
    offending_color: int | None = None
    fitch_map: str | None = None
    oracle_checked: bool = False


class ErrorReport(Report):
    error: str
    detail: str
    line: int | None = None
    position: int | None = None


__all__ = [
    "CheckReport",
    "ColoredEdgeReport",
    "CutReport",
    "EdgeReport",
    "ErrorReport",
    "FitchReport",
    "RefusalReport",
    "Report",
    "SplitsReport",
    "SystemReport",
    "UnresolvedReport",
]

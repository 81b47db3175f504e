"""Console reporter for treepart output using Rich."""

from __future__ import annotations

from typing import TYPE_CHECKING

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel


if TYPE_CHECKING:
    from pathlib import Path

    from treepart.reports.models import (
        CheckReport,
        CutReport,
        ErrorReport,
        FitchReport,
        Report,
        SplitsReport,
        SystemReport,
    )

from treepart.reports.base import Reporter


_STATUS_CONFIG: dict[str, tuple[str, str, str]] = {
    "compatible": ("✓", "green", "COMPATIBLE"),
    "r-compatible": ("~", "yellow", "R-COMPATIBLE ONLY"),
    "incompatible": ("✗", "red", "INCOMPATIBLE"),
    "ok": ("✓", "green", "OK"),
    "not-tree-like": ("✗", "red", "NOT TREE-LIKE"),
    "solved": ("✓", "green", "SOLVED"),
    "no-solution": ("✗", "red", "NO SOLUTION"),
    "explained": ("✓", "green", "EXPLAINED"),
    "not-explainable": ("✗", "red", "NOT EXPLAINABLE"),
    "input-error": ("!", "yellow", "INPUT ERROR"),
    "budget-exceeded": ("!", "yellow", "BUDGET EXCEEDED"),
    "self-check-failed": ("!", "magenta", "SELF-CHECK FAILED"),
}


def _braces(labels: list[str]) -> str:
    return "{" + ",".join(labels) + "}"


class ConsoleReporter(Reporter):
    """Reporter that renders command results as text using Rich formatting.

    The first line is always ``<symbol> <STATUS>``; the lines after it carry the
    evidence. Verbosity below zero prints the status line only.
    """

    def __init__(self, console: Console | None = None, verbosity: int = 0) -> None:
        self.console = console or Console(highlight=False, soft_wrap=True)
        self.verbosity = verbosity

    def _status_symbol(self, status: str) -> str:
        return _STATUS_CONFIG[status][0]

    def _status_color(self, status: str) -> str:
        return _STATUS_CONFIG[status][1]

    def _status_label(self, status: str) -> str:
        return _STATUS_CONFIG[status][2]

    def _print_status(self, report: Report) -> None:
        color = self._status_color(report.status)
        symbol = self._status_symbol(report.status)
        label = self._status_label(report.status)
        self.console.print(f"[{color}]{symbol} {label}[/{color}]")

    def _print_field(self, name: str, value: str) -> None:
        self.console.print(f"  {name}: {escape(value)}")

    def _print_messages(self, report: Report) -> None:
        for message in report.messages:
            self.console.print(f"  [dim]{escape(message)}[/dim]")

    def _quiet(self) -> bool:
        return self.verbosity < 0

    def on_check(self, report: CheckReport) -> None:
        self._print_status(report)
        if self._quiet():
            return
        if report.edges is not None:
            self._print_field(f"{report.edge_choice} edges", str(len(report.edges)))
            for edge in report.edges:
                self.console.print(f"    {escape(str(edge))}")
        if report.unresolved:
            self._print_field("unresolved", str(len(report.unresolved)))
            for item in report.unresolved:
                self.console.print(f"    v{item.vertex} {escape(_braces(item.block))}")
        if report.refined is not None and (report.refine or self.verbosity > 0):
            self._print_field("refined", report.refined)
        if report.refusal is not None:
            refusal = report.refusal
            body = (
                f"edge {refusal.edge} lies inside blocks "
                f"{_braces(refusal.first)} and {_braces(refusal.second)}"
            )
            self.console.print(
                Panel(escape(body), title="witness", title_align="left", border_style="red")
            )
        if self.verbosity > 0:
            self._print_field("tree", report.tree)
            self._print_field("partition", report.partition)
        self._print_messages(report)

    def on_cut(self, report: CutReport) -> None:
        self.console.print(escape(report.partition))
        if self.verbosity > 0:
            for edge in report.edges:
                self.console.print(f"  [dim]cut {escape(str(edge))}[/dim]")

    def on_splits(self, report: SplitsReport) -> None:
        self._print_status(report)
        if self._quiet():
            return
        if report.tree_like is not None:
            self._print_field("tree-like", "yes" if report.tree_like else "no")
        if report.incompatible_pair:
            first, second = report.incompatible_pair
            self._print_field("crossing", f"{first} and {second}")
        if report.splits is not None:
            self._print_field("splits", str(len(report.splits)))
            for split in report.splits:
                self.console.print(f"    {escape(split)}")
        self._print_messages(report)

    def on_system(self, report: SystemReport) -> None:
        self._print_status(report)
        if self._quiet():
            return
        if report.candidates is not None:
            self._print_field("candidates", str(report.candidates))
        if report.budget is not None:
            self._print_field("budget", str(report.budget))
        if report.result is not None:
            self._print_field("tree", report.result)
        elif report.status == "no-solution":
            self.console.print("  no refinement exists")
        self._print_messages(report)

    def on_fitch(self, report: FitchReport) -> None:
        self._print_status(report)
        if self._quiet():
            return
        if report.offending_color is not None:
            self._print_field("offending color", str(report.offending_color))
        if report.tree is not None:
            self._print_field("tree", report.tree)
        for item in report.edge_colors:
            colors = ",".join(map(str, item.colors))
            self.console.print(f"    {escape(str(item.edge))}: {colors}")
        if report.fitch_map is not None:
            self.console.print(escape(report.fitch_map.rstrip("\n")))
        self._print_messages(report)

    def on_error(self, report: ErrorReport) -> None:
        self._print_status(report)
        where = []
        if report.line is not None:
            where.append(f"line {report.line}")
        if report.position is not None:
            where.append(f"position {report.position}")
        prefix = f"{', '.join(where)}: " if where else ""
        self.console.print(f"  {escape(report.error)}: {escape(prefix + report.detail)}")
        self._print_messages(report)

    def on_tracing_enabled(self, output_path: Path) -> None:
        if output_path.exists():
            self.console.print(
                f"[dim]Tracing written to {output_path} ({output_path.stat().st_size} bytes)[/dim]"
            )


__all__ = ["ConsoleReporter"]

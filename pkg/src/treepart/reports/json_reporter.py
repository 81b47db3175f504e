"""JSON reporter: one report object per command, as pretty-printed JSON."""

from __future__ import annotations

from typing import TYPE_CHECKING

from rich.console import Console

from treepart.reports.base import Reporter


if TYPE_CHECKING:
    from treepart.reports.models import (
        CheckReport,
        CutReport,
        ErrorReport,
        FitchReport,
        Report,
        SplitsReport,
        SystemReport,
    )


class JsonReporter(Reporter):
    """Reporter that writes the report model itself, so the schema is the model's."""

    def __init__(self, console: Console | None = None) -> None:
        self.console = console or Console(highlight=False, soft_wrap=True)

    def _emit(self, report: Report) -> None:
        self.console.out(report.model_dump_json(indent=2), highlight=False)

    def on_check(self, report: CheckReport) -> None:
        self._emit(report)

    def on_cut(self, report: CutReport) -> None:
        self._emit(report)

    def on_splits(self, report: SplitsReport) -> None:
        self._emit(report)

    def on_system(self, report: SystemReport) -> None:
        self._emit(report)

    def on_fitch(self, report: FitchReport) -> None:
        self._emit(report)

    def on_error(self, report: ErrorReport) -> None:
        self._emit(report)


__all__ = ["JsonReporter"]

"""Base reporter ABC for treepart command output."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING


if TYPE_CHECKING:
    from pathlib import Path

    from treepart.reports.models import (
        CheckReport,
        CutReport,
        ErrorReport,
        FitchReport,
        SplitsReport,
        SystemReport,
    )


class Reporter(ABC):
    """Abstract base class for command reporters.

    Each command calls exactly one ``on_*`` hook with its finished report.
    """

    @abstractmethod
    def on_check(self, report: CheckReport) -> None:
        """Called when ``check`` has a verdict."""

    @abstractmethod
    def on_cut(self, report: CutReport) -> None:
        """Called with the partition induced by cutting edges."""

    @abstractmethod
    def on_splits(self, report: SplitsReport) -> None:
        """Called when ``splits`` has a verdict."""

    @abstractmethod
    def on_system(self, report: SystemReport) -> None:
        """Called when the partition-system search finishes or is refused."""

    @abstractmethod
    def on_fitch(self, report: FitchReport) -> None:
        """Called when Fitch map recognition finishes."""

    @abstractmethod
    def on_error(self, report: ErrorReport) -> None:
        """Called instead of a command hook when input or a guard fails."""

    def on_tracing_enabled(self, output_path: Path) -> None:  # noqa: B027
        """Called after a traced command to report the trace location."""

"""Reporting module for treepart command output."""

from treepart.reports.base import Reporter
from treepart.reports.console import ConsoleReporter
from treepart.reports.json_reporter import JsonReporter
from treepart.reports.models import (
    CheckReport,
    ColoredEdgeReport,
    CutReport,
    EdgeReport,
    ErrorReport,
    FitchReport,
    RefusalReport,
    Report,
    SplitsReport,
    SystemReport,
    UnresolvedReport,
)


__all__ = [
    "CheckReport",
    "ColoredEdgeReport",
    "ConsoleReporter",
    "CutReport",
    "EdgeReport",
    "ErrorReport",
    "FitchReport",
    "JsonReporter",
    "RefusalReport",
    "Report",
    "Reporter",
    "SplitsReport",
    "SystemReport",
    "UnresolvedReport",
]

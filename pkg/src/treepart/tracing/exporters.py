"""Span exporters for treepart commands and solvers."""

from __future__ import annotations

import json
import logging
from collections import defaultdict
from collections.abc import Sequence
from pathlib import Path
from threading import Lock
from typing import Any

from opentelemetry.sdk.trace import ReadableSpan
from opentelemetry.sdk.trace.export import SpanExporter, SpanExportResult


logger = logging.getLogger(__name__)


def span_record(span: ReadableSpan) -> dict[str, Any]:
    """Flat JSON-ready view of a finished span.

    Durations are in milliseconds; ``parent_id`` is None for root spans.
    """
    context = span.get_span_context()
    start, end = span.start_time or 0, span.end_time or 0
    return {
        "name": span.name,
        "trace_id": format(context.trace_id, "032x") if context else None,
        "span_id": format(context.span_id, "016x") if context else None,
        "parent_id": format(span.parent.span_id, "016x") if span.parent else None,
        "duration_ms": (end - start) / 1e6,
        "status": span.status.status_code.name,
        "attributes": dict(span.attributes or {}),
    }


class StreamingFileSpanExporter(SpanExporter):
    """Appends one JSON line per finished span, so long searches stream to disk."""

    def __init__(self, output_path: Path | str) -> None:
        self.output_path = Path(output_path)
        self.reset()

    def reset(self) -> None:
        self.output_path.parent.mkdir(parents=True, exist_ok=True)
        self.output_path.write_text("")

    def export(self, spans: Sequence[ReadableSpan]) -> SpanExportResult:
        try:
            with self.output_path.open("a", encoding="utf-8") as f:
                f.writelines(json.dumps(span_record(span)) + "\n" for span in spans)
        except OSError:
            logger.exception("could not write spans to %s", self.output_path)
            return SpanExportResult.FAILURE
        return SpanExportResult.SUCCESS


class SpanStore(SpanExporter):
    """Keeps finished spans in memory, indexed by span name and by trace."""

    def __init__(self) -> None:
        self._by_name: dict[str, list[ReadableSpan]] = defaultdict(list)
        self._by_trace: dict[str, list[ReadableSpan]] = defaultdict(list)
        self._lock = Lock()

    def export(self, spans: Sequence[ReadableSpan]) -> SpanExportResult:
        with self._lock:
            for span in spans:
                self._by_name[span.name].append(span)
                self._by_trace[format(span.context.trace_id, "032x")].append(span)
        return SpanExportResult.SUCCESS

    def find(self, name: str) -> list[ReadableSpan]:
        with self._lock:
            return list(self._by_name.get(name, []))

    def in_trace(self, trace_id: str) -> list[ReadableSpan]:
        with self._lock:
            return list(self._by_trace.get(trace_id, []))

    def names(self) -> list[str]:
        """Span names seen so far, in first-finished order."""
        with self._lock:
            return list(self._by_name)

    def clear(self) -> None:
        with self._lock:
            self._by_name.clear()
            self._by_trace.clear()

    def shutdown(self) -> None:
        self.clear()

    def force_flush(self, timeout_millis: int = 30000) -> bool:  # noqa: ARG002
        return True


__all__ = ["SpanStore", "StreamingFileSpanExporter", "span_record"]

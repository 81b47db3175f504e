"""Tracing setup for treepart.

Commands and the exhaustive solvers open spans through :func:`trace_step`.
Until :func:`init_tracing` runs, the default OpenTelemetry provider hands out
non-recording spans and tracing costs nothing.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from opentelemetry import trace
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import SimpleSpanProcessor

from treepart.tracing.exporters import SpanStore, StreamingFileSpanExporter


DEFAULT_TRACE_OUTPUT = ".treepart/traces.jsonl"
SPAN_PREFIX = "treepart."


@dataclass
class _TracingState:
    file: StreamingFileSpanExporter
    store: SpanStore


_state: _TracingState | None = None


def qualify(name: str) -> str:
    """Prefix ``name`` with ``treepart.`` unless it already carries it."""
    return name if name.startswith(SPAN_PREFIX) else SPAN_PREFIX + name


def init_tracing(*, output_path: Path | str = DEFAULT_TRACE_OUTPUT) -> None:
    """Install a tracer provider that streams spans to ``output_path``.

    Only the first call installs a provider; later calls redirect the file.
    """
    global _state  # noqa: PLW0603

    if _state is not None:
        _state.file.output_path = Path(output_path)
        _state.file.reset()
        return

    _state = _TracingState(StreamingFileSpanExporter(output_path), SpanStore())
    provider = TracerProvider(resource=Resource.create({"service.name": "treepart"}))
    provider.add_span_processor(SimpleSpanProcessor(_state.file))
    provider.add_span_processor(SimpleSpanProcessor(_state.store))
    trace.set_tracer_provider(provider)


def is_tracing_enabled() -> bool:
    return _state is not None


def get_span_store() -> SpanStore | None:
    return _state.store if _state is not None else None


def clear_traces() -> None:
    """Empty the trace file and the in-memory store."""
    if _state is not None:
        _state.file.reset()
        _state.store.clear()


@contextmanager
def trace_step(name: str, attributes: Mapping[str, Any] | None = None) -> Iterator[trace.Span]:
    """Open a span under the current one.

    Args:
        name: Span name; ``treepart.`` is prepended when missing.
        attributes: Span attributes, keys qualified the same way.

    Yields:
        The open span, for attributes known only at the end of the step.
    """
    tracer = trace.get_tracer("treepart")
    with tracer.start_as_current_span(qualify(name)) as span:
        for key, value in (attributes or {}).items():
            span.set_attribute(qualify(key), value)
        yield span


__all__ = [
    "DEFAULT_TRACE_OUTPUT",
    "SPAN_PREFIX",
    "clear_traces",
    "get_span_store",
    "init_tracing",
    "is_tracing_enabled",
    "qualify",
    "trace_step",
]

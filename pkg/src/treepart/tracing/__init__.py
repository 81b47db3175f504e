from treepart.tracing.exporters import SpanStore, StreamingFileSpanExporter, span_record
from treepart.tracing.lifecycle import (
    DEFAULT_TRACE_OUTPUT,
    SPAN_PREFIX,
    clear_traces,
    get_span_store,
    init_tracing,
    is_tracing_enabled,
    qualify,
    trace_step,
)


__all__ = [
    "DEFAULT_TRACE_OUTPUT",
    "SPAN_PREFIX",
    "SpanStore",
    "StreamingFileSpanExporter",
    "clear_traces",
    "get_span_store",
    "init_tracing",
    "is_tracing_enabled",
    "qualify",
    "span_record",
    "trace_step",
]

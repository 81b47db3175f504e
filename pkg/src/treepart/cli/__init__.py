"""CLI module for treepart."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import NoReturn

from rich.console import Console
from rich.logging import RichHandler

from treepart.compat import (
    VerdictStatus,
    forest_partition,
    is_compatible_unrooted,
    is_r_compatible,
    maximum_separating_edges,
    minimum_separating_edges,
)
from treepart.compat.models import CompatVerdict, SeparatingEdgeSet
from treepart.config import EDGE_CHOICES, FORMATS, TreepartConfig, load_config
from treepart.core.partition import Partition
from treepart.errors import (
    BudgetExceededError,
    ForeignEdgeError,
    InputError,
    NotMonochromaticFitchError,
    NotTreeLikeError,
    PartitionFormatError,
    SelfCheckError,
    TooLargeError,
)
from treepart.io import (
    format_fitch_map,
    parse_edge_colored_tree,
    parse_fitch_map,
    parse_newick,
    parse_partition_document,
    parse_split_system,
    resolve_vertex,
    serialize_newick,
)
from treepart.oracle import (
    brute_compat_tp,
    brute_compatible,
    brute_exist_tp,
    brute_r_compatible,
    brute_split_subsets,
)
from treepart.reports import (
    CheckReport,
    ColoredEdgeReport,
    ConsoleReporter,
    CutReport,
    EdgeReport,
    ErrorReport,
    FitchReport,
    JsonReporter,
    RefusalReport,
    Reporter,
    SplitsReport,
    SystemReport,
    UnresolvedReport,
)
from treepart.splits import is_compatible_splits, meet_of_splits, splits_of
from treepart.systems import (
    EdgeColoredTree,
    compat_tp,
    count_binary_refinements,
    explainable,
    fitch_map_of,
    get_settings,
    monochromatic_partitions,
    symm_fitch_recognition,
    system_compatible_fixed,
)
from treepart.tracing import init_tracing, qualify, trace_step
from treepart.tree import is_refinement, unroot
from treepart.tree.rooted import RootedTree


logger = logging.getLogger(__name__)

EXIT_INPUT_ERROR = 3
EXIT_BUDGET = 4
EXIT_SELF_CHECK = 5


class UsageError(InputError):
    """Command-line arguments that do not form a valid invocation."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


Command = Callable[[argparse.Namespace, TreepartConfig, Reporter], int]


def main(argv: Sequence[str] | None = None) -> None:
    """Entry point for the treepart CLI."""
    args_in = list(sys.argv[1:] if argv is None else argv)
    fallback: Reporter = ConsoleReporter()
    try:
        config = load_config()
        parser = _build_parser()
        args = parser.parse_args([*config.addopts, *args_in] if config.addopts else args_in)
    except InputError as exc:
        raise SystemExit(_report_error(fallback, "treepart", exc)) from None

    if args.command is None:
        parser.print_help()
        raise SystemExit(0)

    verbosity = config.verbosity + args.verbose - args.quiet
    _configure_logging(verbosity)
    output_format = args.format or config.format
    reporter: Reporter = (
        JsonReporter() if output_format == "json" else ConsoleReporter(verbosity=verbosity)
    )

    trace_output = Path(args.trace_output or config.trace_output)
    if args.trace:
        init_tracing(output_path=trace_output)

    exit_code = _dispatch(args.handler, args, config, reporter)
    if args.trace:
        reporter.on_tracing_enabled(trace_output)
    raise SystemExit(exit_code)


def _build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, help="Output format (default: text)")
    common.add_argument(
        "--budget", type=int, help="Largest number of binary refinements to enumerate"
    )
    common.add_argument(
        "--oracle",
        action="store_true",
        default=None,
        help="Re-check every verdict by brute force on small instances",
    )
    common.add_argument(
        "--trace", action="store_true", help="Enable OpenTelemetry tracing of the command"
    )
    common.add_argument(
        "--trace-output",
        type=str,
        help="Output path for trace data (default: .treepart/traces.jsonl)",
    )
    common.add_argument("-q", "--quiet", action="count", default=0, help="Reduce CLI output")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="Increase CLI output"
    )

    parser = _ArgumentParser(
        prog="treepart", description="Compatibility of partitions with phylogenetic trees"
    )
    subparsers = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)

    check = subparsers.add_parser(
        "check", parents=[common], help="Decide whether a tree fits a partition"
    )
    check.add_argument("tree", help="Newick tree file")
    check.add_argument("partition", help="File holding one partition")
    check.add_argument(
        "--unrooted", action="store_true", help="Treat the tree as unrooted"
    )
    check.add_argument(
        "--refine", action="store_true", help="Print the compatible refinement if one is needed"
    )
    check.add_argument(
        "--edges", choices=EDGE_CHOICES, help="Separating edge set to report (default: canonical)"
    )
    check.set_defaults(handler=cmd_check)

    cut = subparsers.add_parser(
        "cut", parents=[common], help="Print the partition left after deleting edges"
    )
    cut.add_argument("tree", help="Newick tree file")
    cut.add_argument(
        "edges", nargs="*", help="Edges by the vertex below them: v<id>, leaf label or inner name"
    )
    cut.set_defaults(handler=cmd_cut)

    splits = subparsers.add_parser(
        "splits", parents=[common], help="Find splits of a tree whose common refinement is P"
    )
    splits.add_argument(
        "inputs", nargs="*", help="TREE PARTITION, or PARTITION with --splits-file"
    )
    splits.add_argument("--splits-file", help="Read a split system instead of a tree")
    splits.add_argument(
        "--check-treelike", action="store_true", help="Report whether the splits are tree-like"
    )
    splits.set_defaults(handler=cmd_splits)

    system = subparsers.add_parser(
        "system",
        parents=[common],
        help="Find a refinement fitting every partition of a system",
    )
    system.add_argument("inputs", nargs="+", help="[TREE] SYSTEM; without a tree any tree will do")
    system.set_defaults(handler=cmd_system)

    fitch = subparsers.add_parser(
        "fitch", parents=[common], help="Recognize symmetrized Fitch maps"
    )
    fitch.add_argument("map", nargs="?", help="Fitch map file")
    fitch.add_argument("--tree", help="Newick tree to explain the map on")
    fitch.add_argument(
        "--edge-colors", help="Edge colors on --tree; prints the map they explain"
    )
    fitch.set_defaults(handler=cmd_fitch)

    return parser


def _configure_logging(verbosity: int) -> None:
    if verbosity < 0:
        level = logging.ERROR
    elif verbosity == 0:
        level = logging.WARNING
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def _dispatch(
    handler: Command, args: argparse.Namespace, config: TreepartConfig, reporter: Reporter
) -> int:
    with trace_step(f"cli.{args.command}") as span:
        try:
            code = handler(args, config, reporter)
        except InputError as exc:
            code = _report_error(reporter, args.command, exc)
        except BudgetExceededError as exc:
            logger.info("budget exceeded: %s", exc)
            reporter.on_error(
                ErrorReport(
                    command=args.command,
                    status="budget-exceeded",
                    exit_code=EXIT_BUDGET,
                    error=type(exc).__name__,
                    detail=str(exc),
                )
            )
            code = EXIT_BUDGET
        except SelfCheckError as exc:
            logger.error("self-check failed: %s", exc)  # noqa: TRY400
            reporter.on_error(
                ErrorReport(
                    command=args.command,
                    status="self-check-failed",
                    exit_code=EXIT_SELF_CHECK,
                    error=type(exc).__name__,
                    detail=str(exc),
                )
            )
            code = EXIT_SELF_CHECK
        span.set_attribute(qualify("exit_code"), code)
        return code


def _report_error(reporter: Reporter, command: str, exc: InputError) -> int:
    reporter.on_error(
        ErrorReport(
            command=command,
            status="input-error",
            exit_code=EXIT_INPUT_ERROR,
            error=type(exc).__name__,
            detail=exc.reason,
            line=exc.line,
            position=exc.position,
        )
    )
    return EXIT_INPUT_ERROR


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        msg = f"cannot read {path}: {exc.strerror or exc}"
        raise UsageError(msg) from None


def _read_tree(path: str) -> RootedTree:
    return parse_newick(_read(path))


def _read_partition(path: str, ground: tuple[str, ...]) -> Partition:
    document = parse_partition_document(_read(path), ground)
    if len(document.partitions) != 1:
        msg = f"{path}: expected exactly one partition, found {len(document.partitions)}"
        raise PartitionFormatError(msg)
    return document.partitions[0]


def _resolve_budget(args: argparse.Namespace, config: TreepartConfig) -> int:
    if args.budget is not None:
        if args.budget <= 0:
            msg = f"--budget must be positive, got {args.budget}"
            raise UsageError(msg)
        return args.budget
    if config.budget is not None:
        return config.budget
    return get_settings().budget


def _use_oracle(args: argparse.Namespace, config: TreepartConfig) -> bool:
    return bool(args.oracle) if args.oracle is not None else config.oracle


def _run_oracle(check: Callable[[], None], messages: list[str]) -> bool:
    """Run one brute-force cross-check; oversized instances are skipped with a warning."""
    try:
        check()
    except TooLargeError as exc:
        logger.warning("oracle skipped: %s", exc)
        messages.append(f"oracle skipped: {exc.reason}")
        return False
    return True


def _edge_reports(t: RootedTree, edges: SeparatingEdgeSet) -> list[EdgeReport]:
    return [EdgeReport.of(t, edge) for edge in edges]


def _chosen_edges(verdict: CompatVerdict, choice: str) -> SeparatingEdgeSet | None:
    if choice == "min":
        return minimum_separating_edges(verdict.tree, verdict.partition)
    if choice == "max":
        return maximum_separating_edges(verdict.tree, verdict.partition)
    return verdict.separating


def cmd_check(args: argparse.Namespace, config: TreepartConfig, reporter: Reporter) -> int:
    """Decide compatibility of a tree with one partition."""
    parsed = _read_tree(args.tree)
    p = _read_partition(args.partition, parsed.ground)
    edge_choice = args.edges or config.edges
    messages: list[str] = []

    if args.unrooted:
        fast = is_compatible_unrooted(unroot(parsed), p)
        t = fast.tree
        verdict = fast if fast.is_compatible else is_r_compatible(t, p)
    else:
        t = parsed
        verdict = is_r_compatible(t, p)
    logger.info("%s: %s", args.tree, verdict.status.value)

    edges = None
    if verdict.is_compatible:
        chosen = _chosen_edges(verdict, edge_choice)
        if chosen is not None:
            edges = _edge_reports(t, chosen)

    oracle_checked = False
    if _use_oracle(args, config):

        def cross_check() -> None:
            expected = brute_compatible(t, p)
            if expected != verdict.is_compatible:
                msg = f"compatibility is {verdict.is_compatible}, brute force says {expected}"
                raise SelfCheckError(msg)
            if verdict.is_compatible and edges is not None:
                cut = forest_partition(t, [edge.vertex for edge in edges])
                if cut != p:
                    msg = f"reported edges cut out {cut}, not {p}"
                    raise SelfCheckError(msg)
            expected_r = brute_r_compatible(t, p)
            if expected_r != verdict.is_r_compatible:
                msg = (
                    f"r-compatibility is {verdict.is_r_compatible}, brute force says {expected_r}"
                )
                raise SelfCheckError(msg)

        oracle_checked = _run_oracle(cross_check, messages)

    refusal = None
    if verdict.refusal is not None:
        witness = verdict.refusal
        refusal = RefusalReport(
            edge=EdgeReport.of(t, witness.edge),
            first=list(p.blocks[witness.first]),
            second=list(p.blocks[witness.second]),
        )
    refined = None
    if verdict.status is VerdictStatus.R_COMPATIBLE_ONLY and verdict.refined is not None:
        refined = serialize_newick(verdict.refined)

    report = CheckReport(
        status=verdict.status.value,
        exit_code=verdict.status.exit_code,
        messages=messages,
        tree=serialize_newick(t),
        partition=p.format(),
        unrooted=args.unrooted,
        edge_choice=edge_choice,
        edges=edges,
        unresolved=[
            UnresolvedReport(vertex=v, block=list(p.blocks[block]))
            for v, block in sorted(verdict.unresolved)
        ],
        refined=refined,
        refine=args.refine,
        refusal=refusal,
        oracle_checked=oracle_checked,
    )
    reporter.on_check(report)
    return report.exit_code


def cmd_cut(
    args: argparse.Namespace,
    config: TreepartConfig,  # noqa: ARG001
    reporter: Reporter,
) -> int:
    """Cut the named edges and print the components as a partition."""
    t = _read_tree(args.tree)
    edges = []
    for token in args.edges:
        v = resolve_vertex(t, token)
        if v == t.root:
            msg = f"{token!r} is the root, which has no edge above it"
            raise ForeignEdgeError(msg)
        edges.append(v)
    p = forest_partition(t, edges)
    report = CutReport(
        status="ok",
        exit_code=0,
        tree=serialize_newick(t),
        edges=[EdgeReport.of(t, v) for v in sorted(set(edges))],
        partition=p.format(),
    )
    reporter.on_cut(report)
    return 0


def cmd_splits(args: argparse.Namespace, config: TreepartConfig, reporter: Reporter) -> int:
    """Find the splits of a tree or split system whose common refinement is a partition."""
    inputs = list(args.inputs)
    expected = 0 if args.splits_file else 1
    if len(inputs) not in (expected, expected + 1) or (
        len(inputs) == expected and not args.check_treelike
    ):
        msg = "splits takes TREE PARTITION, or PARTITION with --splits-file"
        raise UsageError(msg)
    if args.splits_file:
        s = parse_split_system(_read(args.splits_file))
    else:
        s = splits_of(unroot(_read_tree(inputs.pop(0))))
    partition_path = inputs[0] if inputs else None

    pair = s.incompatible_pair
    crossing = [pair[0].format(), pair[1].format()] if pair is not None else None
    tree_like = s.is_tree_like if args.check_treelike else None

    if partition_path is None:
        status = "ok" if s.is_tree_like else "not-tree-like"
        report = SplitsReport(
            status=status,
            exit_code=0 if s.is_tree_like else 2,
            tree_like=tree_like,
            incompatible_pair=crossing,
        )
        reporter.on_splits(report)
        return report.exit_code

    p = _read_partition(partition_path, s.ground)
    messages: list[str] = []
    try:
        chosen = is_compatible_splits(s, p)
    except NotTreeLikeError as exc:
        logger.info("split system is not tree-like: %s", exc)
        report = SplitsReport(
            status="not-tree-like",
            exit_code=2,
            partition=p.format(),
            tree_like=False,
            incompatible_pair=crossing,
        )
        reporter.on_splits(report)
        return 2

    oracle_checked = False
    if _use_oracle(args, config):

        def cross_check() -> None:
            found = brute_split_subsets(s, p)
            if bool(found) != (chosen is not None):
                msg = f"split fit is {chosen is not None}, brute force says {bool(found)}"
                raise SelfCheckError(msg)
            if chosen is not None and meet_of_splits(chosen, s.ground) != p:
                msg = f"reported splits do not refine to {p}"
                raise SelfCheckError(msg)

        oracle_checked = _run_oracle(cross_check, messages)

    report = SplitsReport(
        status="compatible" if chosen is not None else "incompatible",
        exit_code=0 if chosen is not None else 2,
        messages=messages,
        partition=p.format(),
        splits=sorted(split.format() for split in chosen) if chosen is not None else None,
        tree_like=tree_like,
        incompatible_pair=crossing if args.check_treelike else None,
        oracle_checked=oracle_checked,
    )
    reporter.on_splits(report)
    return report.exit_code


def cmd_system(args: argparse.Namespace, config: TreepartConfig, reporter: Reporter) -> int:
    """Search a refinement of a tree (or any tree) that fits every partition."""
    inputs = list(args.inputs)
    if len(inputs) > 2:  # noqa: PLR2004
        msg = "system takes [TREE] SYSTEM"
        raise UsageError(msg)
    t = _read_tree(inputs[0]) if len(inputs) == 2 else None  # noqa: PLR2004
    document = parse_partition_document(_read(inputs[-1]), t.ground if t is not None else None)
    if t is None:
        if not document.ground:
            msg = f"{inputs[-1]}: an empty partition system does not determine a leaf set"
            raise PartitionFormatError(msg)
        start = RootedTree.star(document.ground)
    else:
        start = t
    budget = _resolve_budget(args, config)
    members = list(document.partitions)
    candidates = count_binary_refinements(start)
    result = compat_tp(start, members, budget)

    messages: list[str] = []
    if result is not None:
        if not is_refinement(result, start) or not system_compatible_fixed(result, members):
            msg = "the returned tree does not refine the input or misses a member"
            raise SelfCheckError(msg)
    oracle_checked = False
    if _use_oracle(args, config):

        def cross_check() -> None:
            if t is None:
                expected = brute_exist_tp(members, document.ground) is not None
            else:
                expected = brute_compat_tp(t, members)
            if expected != (result is not None):
                msg = f"a common refinement exists: {result is not None}, brute force: {expected}"
                raise SelfCheckError(msg)

        oracle_checked = _run_oracle(cross_check, messages)

    report = SystemReport(
        status="solved" if result is not None else "no-solution",
        exit_code=0 if result is not None else 2,
        messages=messages,
        members=[p.format() for p in members],
        tree=serialize_newick(t) if t is not None else None,
        result=serialize_newick(result) if result is not None else None,
        candidates=candidates,
        budget=budget,
        oracle_checked=oracle_checked,
    )
    reporter.on_system(report)
    return report.exit_code


def _colored_edges(tc: EdgeColoredTree) -> list[ColoredEdgeReport]:
    return [
        ColoredEdgeReport(edge=EdgeReport.of(tc.tree, edge), colors=sorted(tc.of(edge)))
        for edge in tc.colored_edges()
    ]


def cmd_fitch(args: argparse.Namespace, config: TreepartConfig, reporter: Reporter) -> int:
    """Recognize a symmetrized Fitch map, on a given tree or on any tree."""
    if args.edge_colors:
        if args.map or not args.tree:
            msg = "--edge-colors needs --tree and no map file"
            raise UsageError(msg)
        t = _read_tree(args.tree)
        tc = parse_edge_colored_tree(_read(args.edge_colors), t)
        eps = fitch_map_of(tc)
        report = FitchReport(
            status="explained",
            exit_code=0,
            colors=list(eps.palette),
            tree=serialize_newick(t),
            edge_colors=_colored_edges(tc),
            fitch_map=format_fitch_map(eps),
        )
        reporter.on_fitch(report)
        return 0
    if not args.map:
        msg = "fitch takes a map file, or --tree with --edge-colors"
        raise UsageError(msg)

    t = _read_tree(args.tree) if args.tree else None
    eps = parse_fitch_map(_read(args.map), t.ground if t is not None else None)
    colors = list(eps.palette)
    try:
        if t is not None:
            tc = explainable(eps, t)
        else:
            tc = symm_fitch_recognition(eps, _resolve_budget(args, config))
    except NotMonochromaticFitchError as exc:
        logger.info("%s", exc)
        report = FitchReport(
            status="not-explainable",
            exit_code=2,
            colors=colors,
            offending_color=exc.color,
            messages=[exc.reason],
        )
        reporter.on_fitch(report)
        return 2

    messages: list[str] = []
    if tc is not None and fitch_map_of(tc) != eps:
        msg = "the edge-colored tree found does not explain the map"
        raise SelfCheckError(msg)
    oracle_checked = False
    if tc is None and _use_oracle(args, config):

        def cross_check() -> None:
            partitions = monochromatic_partitions(eps)
            if t is not None:
                expected = all(brute_compatible(t, p) for p in partitions)
            else:
                expected = brute_exist_tp(partitions, eps.ground) is not None
            if expected:
                msg = "no explaining tree was found but brute force finds one"
                raise SelfCheckError(msg)

        oracle_checked = _run_oracle(cross_check, messages)
    if tc is None:
        messages.append("no tree" if t is None else "the tree cannot explain the map")

    report = FitchReport(
        status="explained" if tc is not None else "not-explainable",
        exit_code=0 if tc is not None else 2,
        messages=messages,
        colors=colors,
        tree=serialize_newick(tc.tree) if tc is not None else None,
        edge_colors=_colored_edges(tc) if tc is not None else [],
        oracle_checked=oracle_checked,
    )
    reporter.on_fitch(report)
    return report.exit_code


__all__ = ["cmd_check", "cmd_cut", "cmd_fitch", "cmd_splits", "cmd_system", "main"]

#!/usr/bin/env python3
"""
Command handlers behind the ordmatch entry point, plus the table
reproduction harness, construction verification and detector oracle checks
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

import archive
import formulas
from config import Settings
from construct import Construction, Family, describe_construction
from core import OrderedGraph, decode_graph, encode_graph, to_dot
from detect import (
    MATCHING_KINDS,
    SPLIT_FORMS,
    PatternKind,
    PatternSpec,
    brute_force_max,
    contains_pattern,
    longest_alternating_path,
    max_pattern,
    max_pattern_matching,
    max_split_pattern,
)
from errors import InvalidArgument, OrderedMatchingError, UsageError
from formulas import ExtremalKind, ExtremalValue
from help_system import HelpSystem
from pattern_parser import PatternParser
from ramsey import find_ramsey
from render import render_arc
from search import SearchOptions, SearchReport, exact_turan
from utils import dump_json, read_text, write_text

__all__ = [
    "EXIT_OK", "EXIT_MISMATCH", "EXIT_BUDGET", "EXIT_USAGE",
    "TableRow", "TableReport", "VerificationResult", "OracleReport",
    "table_rows", "run_table", "verify_construction", "run_oracle_check",
    "render_arc", "run_command",
]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_BUDGET = 3
EXIT_USAGE = 4

K = PatternKind

TABLE_KINDS = (K.SEP, K.NEST, K.CROSS, K.NONSEP, K.NONNEST, K.NONCROSS)
TSV_HEADER = ("pattern", "n", "k", "closed_form", "search", "status")


# ---------------------------------------------------------------------------
# table harness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    kind: PatternKind
    n: int
    k: int
    closed_form: str
    search: str
    status: str

    def to_tsv(self) -> str:
        return "\t".join([self.kind.name, str(self.n), str(self.k),
                          self.closed_form, self.search, self.status])


def _row_status(value: ExtremalValue, report: SearchReport) -> str:
    if not report.exact:
        return "UNRESOLVED"
    found = report.value
    if value.kind is ExtremalKind.DISPUTED:
        return f"DISPUTED_RESOLVED({found})" if value.contains(found) else "MISMATCH"
    if value.kind is ExtremalKind.EXACT:
        return "MATCH" if found == value.value else "MISMATCH"
    return "INTERVAL_CONFIRMED" if value.contains(found) else "MISMATCH"


def table_rows(max_n: int, max_k: int, options: Optional[SearchOptions] = None,
               kinds: Sequence[PatternKind] = TABLE_KINDS) -> List[TableRow]:
    """
    Closed forms against exhaustive search for every (pattern, n, k) in range

    Rows start at n = 2k (n = k for nonsep). Search runs in value-only mode
    up to the search ceiling, without the closed-form cap; larger n get the
    status FORMULA_ONLY.
    """
    if max_k < 1 or max_n < 1:
        raise InvalidArgument(f"need max_n, max_k >= 1, got {max_n}, {max_k}")
    base = options or SearchOptions()
    opts = SearchOptions(budget=base.budget, workers=base.workers, max_witnesses=0,
                         ceiling=base.ceiling, split_depth=base.split_depth, trust_formulas=False)
    rows = []
    for kind in kinds:
        for k in range(2, max_k + 1):
            first = k if kind is K.NONSEP else 2 * k
            for n in range(first, max_n + 1):
                spec = PatternSpec(kind, k)
                try:
                    value = formulas.extremal_value(spec, n)
                except OrderedMatchingError as e:
                    logger.debug("no closed form for %s at n=%d: %s", spec, n, e)
                    continue
                if n > opts.ceiling:
                    rows.append(TableRow(kind, n, k, value.describe(), "-", "FORMULA_ONLY"))
                    continue
                report = exact_turan(n, spec, opts)
                shown = str(report.value) if report.exact else f">={report.value}"
                rows.append(TableRow(kind, n, k, value.describe(), shown, _row_status(value, report)))
    return rows


def format_tsv(rows: Sequence[TableRow]) -> str:
    return "\n".join(["\t".join(TSV_HEADER)] + [row.to_tsv() for row in rows]) + "\n"


def table_exit_code(rows: Sequence[TableRow]) -> int:
    statuses = {row.status for row in rows}
    if "MISMATCH" in statuses:
        return EXIT_MISMATCH
    if "UNRESOLVED" in statuses:
        return EXIT_BUDGET
    return EXIT_OK


@dataclass(frozen=True)
class TableReport:
    rows: Tuple[TableRow, ...]

    @property
    def tsv(self) -> str:
        return format_tsv(self.rows)

    @property
    def exit_code(self) -> int:
        return table_exit_code(self.rows)


def run_table(max_n: int, max_k: int, options: Optional[SearchOptions] = None) -> TableReport:
    """
    Closed forms against search for every table kind, ready for TSV output

    Args:
        max_n (int): Largest vertex count
        max_k (int): Largest matching size (rows start at k = 2)
        options (SearchOptions, optional): Budget, workers and ceiling

    Returns:
        TableReport: The rows; tsv has the header row first
    """
    return TableReport(tuple(table_rows(max_n, max_k, options)))


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationResult:
    construction: Construction
    edges: int
    free: bool
    longest_alt: Optional[int] = None
    problems: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.problems

    @property
    def status(self) -> str:
        return "OK" if self.ok else "MISMATCH"

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.ok else EXIT_MISMATCH

    def summary(self) -> str:
        detail = f"edges={self.edges}, free={str(self.free).lower()}"
        if self.longest_alt is not None:
            detail += f", longest_alt={self.longest_alt}"
        return f"{self.status}({detail})"

    def to_dict(self) -> dict:
        data = self.construction.to_dict()
        data.update({"status": self.status, "free": self.free,
                     "longest_alt": self.longest_alt, "problems": list(self.problems)})
        return data


def verify_construction(family: Family, n: int, k: int, word: Optional[str] = None) -> VerificationResult:
    """
    Regenerate a construction, re-count its edges and re-run every detector on it

    Returns:
        VerificationResult: OK when the count matches the claim and no forbidden
        pattern is found, MISMATCH otherwise
    """
    construction = describe_construction(family, n, k, word=word)
    graph = decode_graph(encode_graph(construction.graph))
    problems = []
    if graph.e != construction.claimed_count:
        problems.append(f"{graph.e} edges, claimed {construction.claimed_count}")
    free = True
    for spec in construction.forbidden:
        if contains_pattern(list(graph.edges), spec, n=graph.n):
            free = False
            problems.append(f"contains {spec}")
    longest = None
    if any(spec.kind is K.ALT_PATH for spec in construction.forbidden):
        longest = longest_alternating_path(graph)[0]
    return VerificationResult(construction, graph.e, free, longest, tuple(problems))


# ---------------------------------------------------------------------------
# detector oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleReport:
    trials: int
    seed: int
    checks: int
    mismatches: Tuple[dict, ...] = field(default=())

    @property
    def exit_code(self) -> int:
        return EXIT_MISMATCH if self.mismatches else EXIT_OK

    def to_dict(self) -> dict:
        return {"trials": self.trials, "seed": self.seed, "checks": self.checks,
                "mismatches": list(self.mismatches)}


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> OrderedGraph:
    return OrderedGraph(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < density])


def run_oracle_check(trials: int, max_n: int, seed: int = 0,
                     budget: Optional[int] = None) -> OracleReport:
    """
    Compare every fast detector with brute force on seeded random graphs

    Args:
        trials (int): Number of random graphs
        max_n (int): Largest vertex count drawn
        seed (int): Seed for random.Random
        budget (int, optional): Node budget for each brute-force call

    Returns:
        OracleReport: Number of comparisons and any disagreements
    """
    if trials < 0 or max_n < 1:
        raise InvalidArgument(f"need trials >= 0 and max_n >= 1, got {trials}, {max_n}")
    rng = random.Random(seed)
    kinds = MATCHING_KINDS + (K.ALT_PATH,)
    checks, mismatches = 0, []
    for trial in range(trials):
        graph = random_graph(rng, rng.randint(1, max_n), rng.choice((0.3, 0.5, 0.7)))
        for kind in kinds:
            fast = max_pattern(graph, kind)
            slow = brute_force_max(graph, kind, budget=budget)
            checks += 1
            if fast != slow:
                mismatches.append({"trial": trial, "kind": kind.value, "fast": fast,
                                   "brute": slow, "graph": {"n": graph.n,
                                                            "edges": [list(e) for e in graph.edges]}})
    return OracleReport(trials, seed, checks, tuple(mismatches))


# ---------------------------------------------------------------------------
# command shells
# ---------------------------------------------------------------------------


def _detect_kind(graph: OrderedGraph, kind: PatternKind) -> dict:
    if kind is K.ALT_PATH:
        t, path = longest_alternating_path(graph)
        return {"size": t, **path.to_dict()}
    if kind in MATCHING_KINDS:
        size, witness = max_pattern_matching(graph, kind)
    else:
        size, witness = max_split_pattern(graph, *SPLIT_FORMS[kind])
    return witness.to_dict()


def _emit(args, text: str) -> None:
    write_text(getattr(args, "out", None), text)


def _load_graph(args) -> OrderedGraph:
    return decode_graph(read_text(getattr(args, "input", None)))


def _options(args, settings: Settings) -> SearchOptions:
    return SearchOptions(
        budget=settings.budget,
        workers=settings.threads,
        use_shift_pruning=getattr(args, "shift_prune", False),
        max_witnesses=settings.max_witnesses,
        ceiling=settings.search_ceiling,
    )


def cmd_detect(args, settings: Settings, console: Console) -> int:
    parser = PatternParser()
    if args.oracle is not None:
        report = run_oracle_check(args.oracle, args.max_n, seed=settings.seed, budget=settings.budget)
        _emit(args, dump_json(report.to_dict()))
        if args.out:
            style = "red" if report.mismatches else "green"
            console.print(f"[{style}]{report.checks} checks, {len(report.mismatches)} mismatches[/{style}]")
        return report.exit_code
    graph = _load_graph(args)
    if args.path:
        kinds = [K.ALT_PATH]
    elif args.all or not args.kind:
        kinds = list(PatternKind)
    else:
        kinds = [parser.parse_kind(args.kind)]
    results = {kind.value: _detect_kind(graph, kind) for kind in kinds}
    _emit(args, dump_json(results))
    if args.out:
        table = Table(title=f"Patterns in {graph!r}", show_header=True, header_style="bold cyan")
        table.add_column("Kind", style="green")
        table.add_column("Size", style="yellow")
        for name, result in results.items():
            table.add_row(name, str(result["size"]))
        console.print(table)
    return EXIT_OK


def cmd_turan(args, settings: Settings, console: Console) -> int:
    forbidden = PatternParser().parse_forbidden(args.forbid)
    report = exact_turan(args.n, forbidden, _options(args, settings))
    payload = report.to_dict()
    try:
        payload["closed_form"] = formulas.extremal_value(forbidden, args.n).to_dict()
    except OrderedMatchingError:
        payload["closed_form"] = None
    _emit(args, dump_json(payload))
    if args.archive:
        name = "_".join(str(spec).replace(":", "") for spec in report.forbidden) + f"_n{args.n}"
        archive.save_artifact("turan", name, payload, settings.data_dir)
    if args.out:
        style = "green" if report.exact else "yellow"
        console.print(Panel(
            f"value: {report.value} ({report.kind})\n"
            f"witnesses: {len(report.witnesses)}\n"
            f"nodes explored: {report.nodes_explored}",
            title=f"ex(n={args.n}, {', '.join(map(str, report.forbidden))})",
            border_style=style,
        ))
    return EXIT_OK if report.exact else EXIT_BUDGET


def cmd_construct(args, settings: Settings, console: Console) -> int:
    family = PatternParser().parse_family(args.family)
    result = verify_construction(family, args.n, args.k, word=args.word)
    construction = result.construction
    payload = construction.to_dict()
    payload["verified"] = result.ok
    payload["graph"] = {"n": construction.graph.n,
                        "edges": [list(e) for e in construction.graph.edges]}
    _emit(args, dump_json(payload))
    if args.archive:
        archive.save_artifact("constructions", f"{family.value}_{args.n}_{args.k}", payload, settings.data_dir)
    if args.out:
        console.print(f"[green]{family.value}[/green] on {args.n} vertices: "
                      f"{construction.graph.e} edges ({construction.note}), {result.summary()}")
    return result.exit_code


def cmd_ramsey(args, settings: Settings, console: Console) -> int:
    target = PatternParser().parse_pattern(args.target)
    report = find_ramsey(target, args.nmax, budget=settings.budget, workers=settings.threads,
                         ceiling=settings.ramsey_ceiling)
    if report.witness is not None:
        archive.save_artifact("ramsey", f"{target.kind.value}_{target.size}",
                              report.to_dict(), settings.data_dir)
    _emit(args, dump_json(report.to_dict()))
    if args.out:
        shown = report.exact if report.exact is not None else f">= {report.lower}"
        console.print(f"[cyan]R({target})[/cyan] = {shown} [dim]({report.status})[/dim]")
    return EXIT_BUDGET if report.status == "BUDGET_EXCEEDED" else EXIT_OK


def cmd_table(args, settings: Settings, console: Console) -> int:
    opts = SearchOptions(budget=settings.budget, workers=settings.threads,
                         ceiling=settings.search_ceiling)
    report = run_table(args.max_n, args.max_k, opts)
    _emit(args, report.tsv)
    if args.out:
        table = Table(title="Closed forms against search", show_header=True, header_style="bold cyan")
        for column in TSV_HEADER:
            table.add_column(column)
        for row in report.rows:
            table.add_row(*row.to_tsv().split("\t"))
        console.print(table)
    return report.exit_code


def cmd_verify(args, settings: Settings, console: Console) -> int:
    family = PatternParser().parse_family(args.family)
    result = verify_construction(family, args.n, args.k, word=args.word)
    _emit(args, dump_json(result.to_dict()))
    if args.out:
        style = "green" if result.ok else "red"
        console.print(f"[{style}]{family.value}({args.n}, {args.k}): {result.summary()}[/{style}]")
        for problem in result.problems:
            console.print(f"  [red]• {problem}[/red]")
    return result.exit_code


def cmd_render(args, settings: Settings, console: Console) -> int:
    graph = _load_graph(args)
    if args.format == "dot":
        _emit(args, to_dot(graph))
    else:
        _emit(args, render_arc(graph))
    return EXIT_OK


def cmd_archive(args, settings: Settings, console: Console) -> int:
    if args.category is None:
        table = Table(title="Archived artifacts", show_header=True, header_style="bold cyan")
        table.add_column("Category", style="green")
        table.add_column("Saved", justify="right")
        for category in archive.CATEGORIES:
            table.add_row(category, str(len(archive.list_artifacts(category, settings.data_dir))))
        console.print(table)
        return EXIT_OK
    if args.name is None:
        _emit(args, "\n".join(archive.list_artifacts(args.category, settings.data_dir)) + "\n")
        return EXIT_OK
    data = archive.load_artifact(args.category, args.name, settings.data_dir)
    if data is None:
        raise InvalidArgument(f"no readable artifact '{args.name}' in {args.category}")
    _emit(args, dump_json(data))
    return EXIT_OK


def cmd_help(args, settings: Settings, console: Console) -> int:
    HelpSystem(console).show_help(args.topic)
    return EXIT_OK


COMMAND_HANDLERS: Dict[str, Callable[..., int]] = {
    "detect": cmd_detect,
    "turan": cmd_turan,
    "construct": cmd_construct,
    "ramsey": cmd_ramsey,
    "table": cmd_table,
    "verify": cmd_verify,
    "render": cmd_render,
    "archive": cmd_archive,
    "help": cmd_help,
}


def run_command(args, settings: Settings, console: Optional[Console] = None) -> int:
    """
    Dispatch a parsed command line to its handler

    Args:
        args: argparse namespace with a 'command' attribute
        settings (Settings): Effective settings after CLI overrides
        console (Console, optional): Where human-readable summaries go

    Returns:
        int: Process exit code
    """
    console = console or Console()
    command = PatternParser().check_command(args.command)
    if command not in COMMAND_HANDLERS:
        raise UsageError(f"no handler for command '{command}'")
    return COMMAND_HANDLERS[command](args, settings, console)

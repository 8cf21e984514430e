#!/usr/bin/env python3
"""
Exact Turán numbers of forbidden ordered matchings by branch and bound.

Edges of K_n are decided in lexicographic order, include first. A branch is
cut when the edges it could still gain, capped per edge length and by the
proven closed-form bounds, cannot reach the best value. The first few edge
decisions define a fixed list of independent tasks; running them on one
process or many gives the same report.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

import construct
import formulas
from config import DEFAULT_BUDGET, DEFAULT_MAX_WITNESSES, DEFAULT_SEARCH_CEILING
from core import OrderedGraph, canonical, graph_to_dict
from detect import PatternKind, PatternSpec, contains_pattern, creates_pattern
from errors import (
    BudgetExceeded,
    InvalidArgument,
    NotApplicable,
    OrderedMatchingError,
    OutOfRange,
)

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
EdgeKey = Tuple[Pair, ...]

K = PatternKind

STATUS_EXACT = "EXACT"
STATUS_BUDGET = "BUDGET_EXCEEDED"

# a crossing k-matching is itself an occurrence of each of these
_CROSS_IMPLIED = frozenset({K.CROSS, K.NONSEP, K.NONNEST, K.SNN})


@dataclass(frozen=True)
class SearchOptions:
    """
    Knobs for exact_turan

    max_witnesses=None keeps every optimum; 0 switches to value-only mode,
    which prunes ties and reports a single optimum.
    trust_formulas=False leaves the closed-form upper bound out of pruning.
    """

    budget: int = DEFAULT_BUDGET
    workers: int = 1
    use_shift_pruning: bool = False
    seed_lower_bound: Optional[int] = None
    max_witnesses: Optional[int] = DEFAULT_MAX_WITNESSES
    ceiling: int = DEFAULT_SEARCH_CEILING
    split_depth: int = 6
    trust_formulas: bool = True

    def __post_init__(self):
        if self.budget <= 0:
            raise InvalidArgument(f"node budget must be positive, got {self.budget}")
        if self.workers < 1:
            raise InvalidArgument(f"worker count must be at least 1, got {self.workers}")
        if self.max_witnesses is not None and self.max_witnesses < 0:
            raise InvalidArgument(f"max_witnesses must be non-negative, got {self.max_witnesses}")
        if self.seed_lower_bound is not None and self.seed_lower_bound < 0:
            raise InvalidArgument(f"seed lower bound must be non-negative, got {self.seed_lower_bound}")
        if self.split_depth < 0:
            raise InvalidArgument(f"split depth must be non-negative, got {self.split_depth}")

    @property
    def collect_all(self) -> bool:
        return self.max_witnesses != 0

    def echo(self) -> dict:
        # worker count is left out so reports compare equal across machines
        return {
            "budget": self.budget,
            "use_shift_pruning": self.use_shift_pruning,
            "seed_lower_bound": self.seed_lower_bound,
            "max_witnesses": self.max_witnesses,
            "split_depth": self.split_depth,
            "trust_formulas": self.trust_formulas,
        }


@dataclass(frozen=True)
class SearchReport:
    n: int
    forbidden: Tuple[PatternSpec, ...]
    value: int
    witnesses: Tuple[OrderedGraph, ...]
    nodes_explored: int
    exact: bool
    status: str
    options: dict = field(default_factory=dict)
    witnesses_truncated: bool = False
    seed: Optional[dict] = None

    @property
    def kind(self) -> str:
        return "EXACT" if self.exact else "LOWER_ONLY"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "forbidden": [str(spec) for spec in self.forbidden],
            "value": self.value,
            "exact": self.exact,
            "status": self.status,
            "kind": self.kind,
            "nodes_explored": self.nodes_explored,
            "witnesses": [graph_to_dict(g) for g in self.witnesses],
            "witnesses_truncated": self.witnesses_truncated,
            "seed": self.seed,
            "options": self.options,
        }


# ---------------------------------------------------------------------------
# problem setup
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Problem:
    n: int
    specs: Tuple[PatternSpec, ...]
    edges: Tuple[Pair, ...]
    length_caps: Tuple[int, ...]
    long_from: int
    long_cap: Optional[int]
    upper: Optional[int]
    shift: bool
    collect: bool
    keep: Optional[int]
    budget: int


def _length_caps(n: int, specs: Sequence[PatternSpec]) -> Tuple[Tuple[int, ...], int, Optional[int]]:
    """Per-length edge caps plus the long-edge cap for crossing-free graphs"""
    unlimited = n * n
    caps = [unlimited] * n
    long_from, long_cap = n, None
    for spec in specs:
        k = spec.size
        if spec.kind in (K.NONNEST, K.SNN):
            for ell in range(1, n):
                caps[ell] = min(caps[ell], 2 * (k - 1))
        elif spec.kind is K.SEP:
            for ell in range(1, n):
                caps[ell] = min(caps[ell], (ell + 1) * (k - 1))
        if spec.kind in _CROSS_IMPLIED and n >= 2 * k:
            bound = formulas.edge_length_bound(formulas.LengthBound.LONG_CROSS, n, k)
            if long_cap is None or bound < long_cap:
                long_from, long_cap = k, bound
    return tuple(caps), long_from, long_cap


def _proven_upper(specs: Sequence[PatternSpec], n: int) -> Optional[int]:
    try:
        return formulas.proven_upper_bound(specs, n)
    except OrderedMatchingError:
        return None


def _seed_candidates(n: int, specs: Sequence[PatternSpec]) -> List[Tuple[str, OrderedGraph]]:
    kinds = frozenset(spec.kind for spec in specs)
    sizes = {spec.size for spec in specs}
    if len(sizes) != 1:
        return []
    k = sizes.pop()
    F = construct.Family
    builders = []
    if kinds == {K.ALT_PATH}:
        if k % 2 == 0:
            builders.append((F.NESTED_ALT, k // 2))
    elif kinds == {K.SEP}:
        builders.append((F.SEPARATED, k))
    elif kinds == {K.NONSEP}:
        builders.append((F.NON_SEPARATED, k))
    elif kinds == {K.NEST}:
        builders.append((F.NESTED_ALT, k))
    elif kinds == {K.NEST, K.CROSS}:
        builders += [(F.NON_SEPARATED, k), (F.NESTED_ALT, k)]
    elif kinds == {K.CROSS, K.SEP}:
        builders.append((F.CROSS_SEP, k))
    elif kinds == {K.NEST, K.SEP}:
        builders.append((F.NEST_SEP, k))
    elif kinds == {K.NEST, K.CROSS, K.SEP}:
        builders.append((F.NEST_CROSS_SEP, k))
    elif kinds <= {K.NONNEST, K.SNN}:
        builders += [(F.HUB_LONG, k), (F.APEX_CHAIN, k)]
    elif kinds == {K.MSTAR}:
        builders.append((F.MSTAR, k))
    found = []
    for family, param in builders:
        try:
            found.append((family.value, construct.describe_construction(family, n, param).graph))
        except OrderedMatchingError:
            continue
    return found


def _seed_graph(n: int, specs: Sequence[PatternSpec]) -> Optional[Tuple[str, OrderedGraph]]:
    """Largest known construction that really avoids every forbidden pattern"""
    best = None
    for family, graph in _seed_candidates(n, specs):
        if any(contains_pattern(list(graph.edges), spec, n=n) for spec in specs):
            logger.warning("seed %s on %d vertices contains a forbidden pattern; not used", family, n)
            continue
        if best is None or graph.e > best[1].e:
            best = (family, graph)
    if best:
        logger.debug("seeding search with %s (%d edges)", best[0], best[1].e)
    return best


# ---------------------------------------------------------------------------
# the engine
# ---------------------------------------------------------------------------


class _Stop(Exception):
    pass


@dataclass(frozen=True)
class _TaskResult:
    best: int
    graphs: Tuple[EdgeKey, ...]
    nodes: int
    complete: bool
    truncated: bool


class _Engine:
    def __init__(self, problem: _Problem, best: int):
        """Initialize the engine with a starting best value"""
        self.p = problem
        self.best = best
        self.kept: Set[EdgeKey] = set()
        self.truncated = False
        self.nodes = 0
        self.included: List[Pair] = []
        self.excluded: List[Pair] = []
        self.used = [0] * max(problem.n, 1)
        self.used_long = 0
        n, edges = problem.n, problem.edges
        # suffix[i][ell]: edges of length ell among positions i..m-1
        self.suffix = [[0] * max(n, 1) for _ in range(len(edges) + 1)]
        for i in range(len(edges) - 1, -1, -1):
            row = list(self.suffix[i + 1])
            u, v = edges[i]
            row[v - u] += 1
            self.suffix[i] = row

    def bound(self, i: int) -> int:
        p = self.p
        short = long_ = 0
        for ell in range(1, p.n):
            room = min(self.suffix[i][ell], p.length_caps[ell] - self.used[ell])
            if ell >= p.long_from:
                long_ += room
            else:
                short += room
        if p.long_cap is not None:
            long_ = min(long_, p.long_cap - self.used_long)
        total = len(self.included) + short + long_
        return total if p.upper is None else min(total, p.upper)

    def can_include(self, i: int) -> bool:
        p = self.p
        u, v = p.edges[i]
        ell = v - u
        if self.used[ell] >= p.length_caps[ell]:
            return False
        if p.long_cap is not None and ell >= p.long_from and self.used_long >= p.long_cap:
            return False
        if p.shift and any(u <= c and d <= v for c, d in self.excluded):
            return False
        return not any(creates_pattern(self.included, (u, v), spec) for spec in p.specs)

    def can_exclude(self, i: int) -> bool:
        if not self.p.shift:
            return True
        u, v = self.p.edges[i]
        return not any(x <= u and v <= y for x, y in self.included)

    def push(self, i: int, include: bool) -> None:
        edge = self.p.edges[i]
        if include:
            ell = edge[1] - edge[0]
            self.included.append(edge)
            self.used[ell] += 1
            if ell >= self.p.long_from:
                self.used_long += 1
        else:
            self.excluded.append(edge)

    def pop(self, i: int, include: bool) -> None:
        if include:
            edge = self.included.pop()
            ell = edge[1] - edge[0]
            self.used[ell] -= 1
            if ell >= self.p.long_from:
                self.used_long -= 1
        else:
            self.excluded.pop()

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.p.budget:
            raise _Stop()

    def record(self) -> None:
        count = len(self.included)
        key = canonical(OrderedGraph(self.p.n, self.included)).edges
        key = tuple((u, v) for u, v in key)
        if count > self.best:
            self.best = count
            self.kept = {key}
            self.truncated = False
            return
        if not self.p.collect:
            return
        self.kept.add(key)
        keep = self.p.keep
        if keep is not None and len(self.kept) > keep:
            self.kept = set(sorted(self.kept)[:keep])
            self.truncated = True

    def search(self, i: int) -> None:
        self.tick()
        b = self.bound(i)
        if b < self.best or (b == self.best and not self.p.collect):
            return
        if i == len(self.p.edges):
            self.record()
            return
        if self.can_include(i):
            self.push(i, True)
            self.search(i + 1)
            self.pop(i, True)
        if self.can_exclude(i):
            self.push(i, False)
            self.search(i + 1)
            self.pop(i, False)

    def prefixes(self, depth: int) -> List[Tuple[bool, ...]]:
        """Every consistent decision vector over the first depth edges, in search order"""
        out: List[Tuple[bool, ...]] = []
        path: List[bool] = []

        def walk(i: int) -> None:
            self.nodes += 1
            if i == depth:
                out.append(tuple(path))
                return
            for include in (True, False):
                allowed = self.can_include(i) if include else self.can_exclude(i)
                if allowed:
                    self.push(i, include)
                    path.append(include)
                    walk(i + 1)
                    path.pop()
                    self.pop(i, include)

        walk(0)
        return out


def _run_task(problem: _Problem, prefix: Tuple[bool, ...], best: int) -> _TaskResult:
    engine = _Engine(problem, best)
    for i, include in enumerate(prefix):
        engine.push(i, include)
    complete = True
    try:
        engine.search(len(prefix))
    except _Stop:
        complete = False
    return _TaskResult(engine.best, tuple(sorted(engine.kept)), engine.nodes,
                       complete, engine.truncated)


def _run_tasks(problem: _Problem, prefixes: List[Tuple[bool, ...]], best: int,
               workers: int, spent: int) -> Tuple[List[_TaskResult], int]:
    """
    Run tasks and merge in task order

    Results after the task that pushes the running node total past the budget
    are discarded, whichever worker finished first.
    """
    results: List[_TaskResult] = []
    total = spent
    if workers <= 1 or len(prefixes) <= 1:
        for prefix in prefixes:
            result = _run_task(problem, prefix, best)
            results.append(result)
            total += result.nodes
            if total > problem.budget:
                break
        return results, total
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_task, problem, prefix, best) for prefix in prefixes]
        for future in futures:
            result = future.result()
            results.append(result)
            total += result.nodes
            if total > problem.budget:
                for pending in futures:
                    pending.cancel()
                break
    return results, total


def _build_problem(n: int, specs: Tuple[PatternSpec, ...], opts: SearchOptions) -> _Problem:
    shift = opts.use_shift_pruning
    if shift and not (len(specs) == 1 and specs[0].kind is K.NONSEP):
        logger.warning("shift pruning only applies to a single nonsep pattern; ignored for %s",
                       ", ".join(map(str, specs)))
        shift = False
    caps, long_from, long_cap = _length_caps(n, specs)
    return _Problem(
        n=n,
        specs=specs,
        edges=tuple(combinations(range(1, n + 1), 2)),
        length_caps=caps,
        long_from=long_from,
        long_cap=long_cap,
        upper=_proven_upper(specs, n) if opts.trust_formulas else None,
        shift=shift,
        collect=opts.collect_all,
        keep=opts.max_witnesses,
        budget=opts.budget,
    )


def _solve(problem: _Problem, start: int, opts: SearchOptions):
    root = _Engine(problem, start)
    depth = min(opts.split_depth, len(problem.edges))
    prefixes = root.prefixes(depth)
    logger.debug("n=%d: %d tasks at depth %d, start best %d", problem.n, len(prefixes), depth, start)
    results, total = _run_tasks(problem, prefixes, start, opts.workers, root.nodes)
    best = max([start] + [r.best for r in results])
    graphs: Set[EdgeKey] = set()
    truncated = False
    for r in results:
        if r.best == best:
            graphs.update(r.graphs)
            truncated = truncated or r.truncated
    complete = total <= problem.budget and len(results) == len(prefixes)
    return best, graphs, truncated, total, complete


def exact_turan(n: int, forbidden: Union[PatternSpec, Iterable[PatternSpec]],
                opts: Optional[SearchOptions] = None) -> SearchReport:
    """
    Maximum edge count of a graph on [n] avoiding every forbidden pattern

    Args:
        n (int): Vertex count, at most opts.ceiling
        forbidden: PatternSpec or collection of them
        opts (SearchOptions, optional): Budget, workers, pruning and witness settings

    Returns:
        SearchReport: Value and optima up to reversal; status BUDGET_EXCEEDED
        marks the value as a lower bound only
    """
    opts = opts or SearchOptions()
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InvalidArgument(f"vertex count must be a non-negative integer, got {n!r}")
    if n > opts.ceiling:
        raise OutOfRange(f"n={n} is above the search ceiling {opts.ceiling}")
    specs = formulas.normalize_forbidden(forbidden)
    problem = _build_problem(n, specs, opts)

    seed = _seed_graph(n, specs)
    seed_count = seed[1].e if seed else None
    if seed_count is not None:
        start = seed_count if problem.collect else seed_count - 1
    else:
        start = 0 if problem.collect else -1
    hinted = False
    hint = opts.seed_lower_bound
    if hint is not None and (seed_count is None or hint > seed_count):
        start = hint if problem.collect else hint - 1
        hinted = True

    best, graphs, truncated, total, complete = _solve(problem, start, opts)
    if hinted and not graphs and complete:
        logger.warning("no graph reaches the seed lower bound %d; searching again without it", hint)
        restart = seed_count if seed_count is not None else 0
        if not problem.collect:
            restart -= 1
        best, graphs, truncated, rest_total, complete = _solve(problem, restart, opts)
        total += rest_total
    if not graphs and seed is not None and best <= seed_count:
        best = seed_count
        graphs = {tuple((u, v) for u, v in canonical(seed[1]).edges)}

    ordered = sorted(graphs)
    if opts.max_witnesses and len(ordered) > opts.max_witnesses:
        ordered = ordered[:opts.max_witnesses]
        truncated = True
    if truncated:
        logger.warning("witness list for n=%d truncated to %d graphs", n, len(ordered))
    if not complete:
        logger.debug("budget of %d nodes exhausted at n=%d; best so far %d", opts.budget, n, best)

    return SearchReport(
        n=n,
        forbidden=specs,
        value=max(best, 0),
        witnesses=tuple(OrderedGraph(n, key) for key in ordered),
        nodes_explored=total,
        exact=complete,
        status=STATUS_EXACT if complete else STATUS_BUDGET,
        options=opts.echo(),
        witnesses_truncated=truncated,
        seed={"family": seed[0], "edges": seed_count} if seed else None,
    )


def enumerate_extremal(n: int, forbidden: Union[PatternSpec, Iterable[PatternSpec]],
                       opts: Optional[SearchOptions] = None) -> List[OrderedGraph]:
    """
    All extremal graphs up to reversal, as sorted lexicographic representatives

    Raises:
        BudgetExceeded: The search could not finish, so the list would be incomplete
    """
    base = opts or SearchOptions()
    report = exact_turan(n, forbidden, SearchOptions(
        budget=base.budget,
        workers=base.workers,
        use_shift_pruning=False,
        seed_lower_bound=base.seed_lower_bound,
        max_witnesses=None,
        ceiling=base.ceiling,
        split_depth=base.split_depth,
    ))
    if not report.exact:
        raise BudgetExceeded(f"enumeration at n={n} ran out of budget",
                             nodes=report.nodes_explored, partial=report.value)
    return list(report.witnesses)


# ---------------------------------------------------------------------------
# shifting and certificates
# ---------------------------------------------------------------------------


def _violation(graph: OrderedGraph) -> Optional[Pair]:
    """Longest missing edge lying inside a present edge, lex-smallest among ties"""
    best: Optional[Pair] = None
    for a, b in combinations(range(1, graph.n + 1), 2):
        if graph.has_edge(a, b):
            continue
        if best is not None and b - a <= best[1] - best[0]:
            continue
        if any(x <= a and b <= y for x, y in graph.edges):
            best = (a, b)
    return best


def _shift_pass(graph: OrderedGraph, a: int, b: int) -> OrderedGraph:
    present = graph.has_edge
    edges: Set[Pair] = set(graph.edges)
    if present(a, b + 1):
        for v in range(1, b):
            if not present(v, b) and present(v, b + 1):
                edges.discard((v, b + 1))
                edges.add((v, b))
    else:
        for v in range(a + 1, graph.n + 1):
            if not present(a, v) and present(a - 1, v):
                edges.discard((a - 1, v))
                edges.add((a, v))
    return OrderedGraph(graph.n, edges)


def shift_passes(graph: OrderedGraph) -> List[OrderedGraph]:
    """
    Every intermediate graph of the shifting procedure, starting with the input

    Each pass picks the longest missing edge ab inside some present edge and
    shortens edges onto b (or mirrored onto a) by one, so the total edge
    length strictly drops and the edge count never changes.
    """
    sequence = [graph]
    current = graph
    while True:
        violation = _violation(current)
        if violation is None:
            return sequence
        current = _shift_pass(current, *violation)
        sequence.append(current)


def shift_compress(graph: OrderedGraph) -> OrderedGraph:
    return shift_passes(graph)[-1]


def missing_edge_certificate(graph: OrderedGraph, k: int) -> Optional[int]:
    """
    Smallest x with x(x+k) missing and {x+1, ..., x+k-1} complete

    Args:
        graph (OrderedGraph): Typically an edge-maximal nonsep-k-free graph
        k (int): Matching size

    Returns:
        Optional[int]: The vertex x, or None when no such x exists
    """
    if graph.n < 2 * k:
        raise NotApplicable(f"certificates need n >= 2k, got n={graph.n}, k={k}")
    for x in range(1, graph.n - k + 1):
        if graph.has_edge(x, x + k):
            continue
        inside = range(x + 1, x + k)
        if all(graph.has_edge(a, b) for a, b in combinations(inside, 2)):
            return x
    return None

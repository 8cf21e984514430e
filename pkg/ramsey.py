#!/usr/bin/env python3
"""
Ordered Ramsey numbers for alternating paths and non-nested matchings,
found by backtracking over red/blue colourings of K_n.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import FrozenSet, List, Optional, Tuple

import formulas
from config import DEFAULT_BUDGET, DEFAULT_RAMSEY_CEILING
from core import Edge, OrderedGraph
from detect import PatternKind, PatternSpec, contains_pattern, creates_pattern
from errors import InvalidArgument, MalformedInput, OutOfRange, Unsupported

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]

RAMSEY_TARGETS = (PatternKind.ALT_PATH, PatternKind.NONNEST)


class Color(str, Enum):
    RED = "red"
    BLUE = "blue"


@dataclass(frozen=True)
class TwoColoring:
    """Colouring of every edge of K_n; edges not listed as red are blue"""

    n: int
    red: FrozenSet[Pair]

    def __post_init__(self):
        object.__setattr__(self, "red", frozenset((u, v) for u, v in self.red))
        for u, v in self.red:
            if not 1 <= u < v <= self.n:
                raise MalformedInput(f"red edge ({u}, {v}) is not an edge of K_{self.n}")

    def color(self, u: int, v: int) -> Color:
        if u > v:
            u, v = v, u
        return Color.RED if (u, v) in self.red else Color.BLUE

    def red_graph(self) -> OrderedGraph:
        return OrderedGraph(self.n, self.red)

    def blue_graph(self) -> OrderedGraph:
        return OrderedGraph(self.n, [e for e in combinations(range(1, self.n + 1), 2)
                                     if e not in self.red])

    def avoids(self, target: PatternSpec) -> bool:
        """True when neither colour class contains the target"""
        return not any(contains_pattern(list(g.edges), target, n=self.n)
                       for g in (self.red_graph(), self.blue_graph()))

    def to_dict(self) -> dict:
        return {"n": self.n, "red": [[u, v] for u, v in sorted(self.red)]}

    @classmethod
    def from_dict(cls, data) -> "TwoColoring":
        if not isinstance(data, dict) or "n" not in data or "red" not in data:
            raise MalformedInput("colouring JSON must be an object with 'n' and 'red'")
        if not isinstance(data["red"], list):
            raise MalformedInput("'red' must be a list of edges")
        red = OrderedGraph(data["n"], data["red"])
        return cls(red.n, frozenset((u, v) for u, v in red.edges))


@dataclass(frozen=True)
class RamseyReport:
    target: PatternSpec
    exact: Optional[int]
    lower: int
    upper_checked: int
    witness: Optional[TwoColoring]
    nodes_explored: int = 0
    status: str = "EXACT"

    def to_dict(self) -> dict:
        return {
            "target": str(self.target),
            "exact": self.exact,
            "lower": self.lower,
            "upper_checked": self.upper_checked,
            "status": self.status,
            "nodes_explored": self.nodes_explored,
            "witness": self.witness.to_dict() if self.witness else None,
        }


@dataclass(frozen=True)
class ColorClassSets:
    a: FrozenSet[Edge]
    b: FrozenSet[Edge]

    @property
    def disjoint(self) -> bool:
        return not (self.a & self.b)


# ---------------------------------------------------------------------------
# colouring search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Level:
    n: int
    target: PatternSpec
    edges: Tuple[Pair, ...]
    turan: Optional[int]
    budget: int


@dataclass(frozen=True)
class _Outcome:
    red: Optional[Tuple[Pair, ...]]
    nodes: int


class _Stop(Exception):
    pass


def _turan_cap(target: PatternSpec, n: int) -> Optional[int]:
    """Proven edge cap for one colour class, when one applies on n vertices"""
    if target.kind is PatternKind.ALT_PATH:
        t = target.size
        if t % 2 == 0 and n >= t:
            return formulas.nest_value(n, t // 2)
        return None
    k = target.size
    if n >= 2 * k:
        return formulas.nonnest_bounds(n, k)[1]
    return None


class _Colorer:
    def __init__(self, level: _Level):
        """Initialize a colourer for one K_n"""
        self.level = level
        self.red: List[Pair] = []
        self.blue: List[Pair] = []
        self.nodes = 0

    def allowed(self, i: int, color: Color) -> bool:
        edge = self.level.edges[i]
        chosen = self.red if color is Color.RED else self.blue
        return not creates_pattern(chosen, edge, self.level.target)

    def feasible(self, i: int) -> bool:
        cap = self.level.turan
        if cap is None:
            return True
        remaining = len(self.level.edges) - i
        return (cap - len(self.red)) + (cap - len(self.blue)) >= remaining

    def push(self, i: int, color: Color) -> None:
        (self.red if color is Color.RED else self.blue).append(self.level.edges[i])

    def pop(self, color: Color) -> None:
        (self.red if color is Color.RED else self.blue).pop()

    def search(self, i: int) -> bool:
        self.nodes += 1
        if self.nodes > self.level.budget:
            raise _Stop()
        if not self.feasible(i):
            return False
        if i == len(self.level.edges):
            return True
        for color in (Color.RED, Color.BLUE):
            if self.allowed(i, color):
                self.push(i, color)
                if self.search(i + 1):
                    return True
                self.pop(color)
        return False

    def prefixes(self, depth: int, fix_first: bool) -> List[Tuple[Color, ...]]:
        out: List[Tuple[Color, ...]] = []
        path: List[Color] = []

        def walk(i: int) -> None:
            self.nodes += 1
            if not self.feasible(i):
                return
            if i == depth:
                out.append(tuple(path))
                return
            colors = (Color.RED,) if i == 0 and fix_first else (Color.RED, Color.BLUE)
            for color in colors:
                if self.allowed(i, color):
                    self.push(i, color)
                    path.append(color)
                    walk(i + 1)
                    path.pop()
                    self.pop(color)

        walk(0)
        return out


def _color_task(level: _Level, prefix: Tuple[Color, ...]) -> _Outcome:
    colorer = _Colorer(level)
    for i, color in enumerate(prefix):
        colorer.push(i, color)
    try:
        found = colorer.search(len(prefix))
    except _Stop:
        return _Outcome(None, colorer.nodes)
    return _Outcome(tuple(colorer.red) if found else None, colorer.nodes)


def _good_coloring(level: _Level, fix_first: bool, workers: int,
                   split_depth: int) -> Tuple[Optional[TwoColoring], int, bool]:
    """
    Lexicographically least target-free colouring of K_n (red before blue)

    Returns:
        (colouring or None, nodes explored, whether the answer is decided)
    """
    root = _Colorer(level)
    prefixes = root.prefixes(min(max(split_depth, 1), len(level.edges)), fix_first)
    total = root.nodes
    outcomes: List[_Outcome] = []
    if workers <= 1 or len(prefixes) <= 1:
        for prefix in prefixes:
            outcome = _color_task(level, prefix)
            outcomes.append(outcome)
            total += outcome.nodes
            if outcome.red is not None or total > level.budget:
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_color_task, level, prefix) for prefix in prefixes]
            for future in futures:
                outcome = future.result()
                outcomes.append(outcome)
                total += outcome.nodes
                if outcome.red is not None or total > level.budget:
                    for pending in futures:
                        pending.cancel()
                    break
    if total > level.budget:
        return None, total, False
    for outcome in outcomes:
        if outcome.red is not None:
            return TwoColoring(level.n, frozenset(outcome.red)), total, True
    return None, total, True


def find_ramsey(target: PatternSpec, n_max: int, budget: int = DEFAULT_BUDGET,
                workers: int = 1, fix_first_color: bool = True,
                ceiling: int = DEFAULT_RAMSEY_CEILING, split_depth: int = 6) -> RamseyReport:
    """
    Smallest n such that every red/blue colouring of K_n has a monochromatic target

    Args:
        target (PatternSpec): altpath:t or nonnest:k
        n_max (int): Largest n to try, at most the ceiling
        budget (int): Node budget per vertex count
        workers (int): Worker processes
        fix_first_color (bool): Colour edge (1, 2) red to break the colour swap

    Returns:
        RamseyReport: The exact value when found, else the best lower bound;
        the witness is a target-free colouring on lower - 1 vertices
    """
    target = target if isinstance(target, PatternSpec) else PatternSpec.parse(target)
    if target.kind not in RAMSEY_TARGETS:
        raise Unsupported(f"Ramsey search supports altpath and nonnest targets, not {target.kind.value}")
    if not isinstance(n_max, int) or n_max < 1:
        raise InvalidArgument(f"n_max must be a positive integer, got {n_max!r}")
    if n_max > ceiling:
        raise OutOfRange(f"n_max={n_max} is above the Ramsey ceiling {ceiling}")
    if budget <= 0:
        raise InvalidArgument(f"node budget must be positive, got {budget}")

    start = max(1, target.vertex_count - 1)
    lower, witness, nodes, checked = start, None, 0, start - 1
    for n in range(start, n_max + 1):
        level = _Level(n, target, tuple(combinations(range(1, n + 1), 2)),
                       _turan_cap(target, n), budget)
        coloring, spent, decided = _good_coloring(level, fix_first_color, workers, split_depth)
        nodes += spent
        if not decided:
            logger.debug("%s: budget exhausted at n=%d", target, n)
            return RamseyReport(target, None, lower, checked, witness, nodes, "BUDGET_EXCEEDED")
        checked = n
        if coloring is None:
            logger.debug("%s: every colouring of K_%d has the target", target, n)
            return RamseyReport(target, n, n, n, witness, nodes)
        logger.debug("%s: K_%d has a good colouring", target, n)
        lower, witness = n + 1, coloring
    return RamseyReport(target, None, lower, checked, witness, nodes, "LOWER_ONLY")


# ---------------------------------------------------------------------------
# recolouring sets
# ---------------------------------------------------------------------------


def alt_recolor_sets(m: int, k: int) -> ColorClassSets:
    """
    Edges of K_m with small or large endpoint sum

    A holds xy with x + y <= 2k - 2 and B those with x + y >= 2m - 2k + 4;
    no alternating 2k-path in K_m uses either.
    """
    if k < 1 or m < 2 * k - 1:
        raise OutOfRange(f"recolouring sets need m >= 2k-1, got m={m}, k={k}")
    pairs = list(combinations(range(1, m + 1), 2))
    a = frozenset(Edge(x, y) for x, y in pairs if x + y <= 2 * k - 2)
    b = frozenset(Edge(x, y) for x, y in pairs if x + y >= 2 * m - 2 * k + 4)
    return ColorClassSets(a, b)


def nonnested_long_edges(n: int, k: int) -> List[Edge]:
    """The C(k, 2) edges of length at least n-k+1; no non-nested k-matching uses one"""
    if k < 1 or n < 2 * k:
        raise OutOfRange(f"long edges need n >= 2k, got n={n}, k={k}")
    return [Edge(x, y) for x, y in combinations(range(1, n + 1), 2) if y - x >= n - k + 1]

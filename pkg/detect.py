#!/usr/bin/env python3
"""
Exact detectors for patterned matchings and alternating paths in ordered graphs.

Every detector works on plain lists of (u, v) pairs internally so that the
search and Ramsey engines can call them on partial edge sets without building
OrderedGraph objects. Public entry points take an OrderedGraph and return a
size together with a lexicographically smallest witness.
"""

import logging
from bisect import bisect_left
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

from config import DEFAULT_BUDGET
from core import Edge, OrderedGraph, PairRelation, relation
from errors import BudgetExceeded, InvalidArgument, Unsupported

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class PatternKind(str, Enum):
    SEP = "sep"
    NEST = "nest"
    CROSS = "cross"
    NONSEP = "nonsep"
    NONNEST = "nonnest"
    NONCROSS = "noncross"
    SNN = "snn"
    ALT_PATH = "altpath"
    MSTAR = "mstar"
    MSTARSTAR = "mstarstar"


class Groups(str, Enum):
    TWO = "two"
    ANY = "any"


S, N, C = PairRelation.SEPARATED, PairRelation.NESTED, PairRelation.CROSSING

ALLOWED_RELATIONS: Dict[PatternKind, frozenset] = {
    PatternKind.SEP: frozenset({S}),
    PatternKind.NEST: frozenset({N}),
    PatternKind.CROSS: frozenset({C}),
    PatternKind.NONSEP: frozenset({N, C}),
    PatternKind.NONNEST: frozenset({S, C}),
    PatternKind.NONCROSS: frozenset({S, N}),
}

PAIRWISE_KINDS = tuple(ALLOWED_RELATIONS)
MATCHING_KINDS = PAIRWISE_KINDS + (PatternKind.SNN,)

# split kinds: (inner pattern of each island, how many islands)
SPLIT_FORMS: Dict[PatternKind, Tuple[PatternKind, Groups]] = {
    PatternKind.SNN: (PatternKind.CROSS, Groups.ANY),
    PatternKind.MSTAR: (PatternKind.CROSS, Groups.TWO),
    PatternKind.MSTARSTAR: (PatternKind.NEST, Groups.TWO),
}


@dataclass(frozen=True)
class PatternSpec:
    """A forbidden pattern: a kind plus its size k (vertex count t for paths)"""

    kind: PatternKind
    size: int

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", PatternKind(self.kind))
        except ValueError:
            raise InvalidArgument(f"unknown pattern kind {self.kind!r}")
        if not isinstance(self.size, int) or isinstance(self.size, bool) or self.size < 1:
            raise InvalidArgument(f"pattern size must be a positive integer, got {self.size!r}")
        if self.kind is PatternKind.ALT_PATH and self.size < 2:
            raise InvalidArgument("an alternating path needs at least 2 vertices")

    @classmethod
    def parse(cls, text: str) -> "PatternSpec":
        """Parse 'kind:size', e.g. 'nonsep:3' or 'altpath:4'"""
        name, sep, size = text.strip().lower().partition(":")
        if not sep or not size.strip().isdigit():
            raise InvalidArgument(f"pattern {text!r} must look like 'kind:size'")
        return cls(name.strip(), int(size))

    @property
    def vertex_count(self) -> int:
        return self.size if self.kind is PatternKind.ALT_PATH else 2 * self.size

    def sort_key(self) -> Tuple[str, int]:
        return (self.kind.value, self.size)

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.size}"


@dataclass(frozen=True)
class MatchingWitness:
    edges: Tuple[Edge, ...]
    pattern: PatternKind
    islands: Tuple[Tuple[Edge, ...], ...] = field(default=())
    split: Optional[Tuple[PatternKind, Groups]] = None

    @property
    def size(self) -> int:
        return len(self.edges)

    def verify(self) -> bool:
        """Re-check the witness against the pairwise calculus"""
        edges = list(self.edges)
        if self.split is None and self.pattern in ALLOWED_RELATIONS:
            allowed = ALLOWED_RELATIONS[self.pattern]
            return all(relation(*a, *b) in allowed for a, b in combinations(edges, 2))
        inner, groups = self.split or SPLIT_FORMS[self.pattern]
        if not is_split_matching(edges, inner, groups):
            return False
        if self.islands:
            flat = sorted(e for island in self.islands for e in island)
            return flat == sorted(edges)
        return True

    def to_dict(self) -> dict:
        data = {"size": self.size, "edges": [[u, v] for u, v in self.edges]}
        if self.islands:
            data["islands"] = [[[u, v] for u, v in island] for island in self.islands]
        return data


@dataclass(frozen=True)
class PathWitness:
    vertices: Tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> List[Edge]:
        return [Edge(min(a, b), max(a, b)) for a, b in zip(self.vertices, self.vertices[1:])]

    def verify(self, graph: OrderedGraph) -> bool:
        return is_alternating_path(graph, self.vertices)

    def to_dict(self) -> dict:
        return {"path": list(self.vertices)}


# ---------------------------------------------------------------------------
# size functions on raw edge lists; each honours an optional early-exit cap
# ---------------------------------------------------------------------------


def _sep_size(edges: Sequence[Pair], cap: Optional[int] = None) -> int:
    count, last = 0, 0
    for u, v in sorted(edges, key=lambda e: (e[1], e[0])):
        if u > last:
            count += 1
            last = v
            if cap is not None and count >= cap:
                return cap
    return count


def _nest_depths(edges: Sequence[Pair]) -> Dict[Pair, int]:
    """Longest strictly nested chain having each edge as its outermost member"""
    depths: Dict[Pair, int] = {}
    done: List[Pair] = []
    for u, v in sorted(edges, key=lambda e: (e[1] - e[0], e)):
        best = 0
        for x, y in done:
            if u < x and y < v and depths[(x, y)] > best:
                best = depths[(x, y)]
        depths[(u, v)] = best + 1
        done.append((u, v))
    return depths


def _nest_size(edges: Sequence[Pair], cap: Optional[int] = None) -> int:
    if not edges:
        return 0
    size = max(_nest_depths(edges).values())
    return min(size, cap) if cap is not None else size


def _strict_lis(values: Iterable[int]) -> int:
    tails: List[int] = []
    for value in values:
        pos = bisect_left(tails, value)
        if pos == len(tails):
            tails.append(value)
        else:
            tails[pos] = value
    return len(tails)


def _cross_size(edges: Sequence[Pair], cap: Optional[int] = None) -> int:
    # a crossing family spans the gap right after its largest left endpoint
    best = 0
    for g in sorted({u for u, _ in edges}):
        spanning = sorted((e for e in edges if e[0] <= g < e[1]), key=lambda e: (e[0], -e[1]))
        if len(spanning) <= best:
            continue
        best = max(best, _strict_lis(v for _, v in spanning))
        if cap is not None and best >= cap:
            return cap
    return best


def _bipartite_matching(adjacency: Dict[int, List[int]], cap: Optional[int] = None) -> Dict[int, int]:
    """Augmenting-path matching; returns right vertex -> left vertex"""
    match_right: Dict[int, int] = {}

    def augment(x: int, seen: Set[int]) -> bool:
        for y in adjacency[x]:
            if y in seen:
                continue
            seen.add(y)
            if y not in match_right or augment(match_right[y], seen):
                match_right[y] = x
                return True
        return False

    for x in sorted(adjacency):
        if augment(x, set()) and cap is not None and len(match_right) >= cap:
            break
    return match_right


def _nonsep_size(edges: Sequence[Pair], cap: Optional[int] = None) -> int:
    # vertex-disjoint pairwise non-separated edges share a gap (1-D Helly)
    best = 0
    for g in sorted({u for u, _ in edges}):
        adjacency: Dict[int, List[int]] = {}
        for u, v in edges:
            if u <= g < v:
                adjacency.setdefault(u, []).append(v)
        if min(len(adjacency), len({v for vs in adjacency.values() for v in vs})) <= best:
            continue
        best = max(best, len(_bipartite_matching(adjacency, cap)))
        if cap is not None and best >= cap:
            return cap
    return best


def _nonnest_search(edges: Sequence[Pair], cap: Optional[int] = None) -> List[Pair]:
    """
    DFS over edges in lexicographic order keeping right endpoints increasing.

    The first matching of each new size met in this order is the
    lexicographically smallest of that size, so the returned list is the
    lex-min maximum witness (or the lex-min cap-sized one).
    """
    order = sorted(edges)
    m = len(order)
    top = max((v for _, v in order), default=0)
    best: List[Pair] = []
    chosen: List[Pair] = []

    def dfs(start: int, last_u: int, last_v: int, used: int) -> bool:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
            if cap is not None and len(best) >= cap:
                return True
        for i in range(start, m):
            u, v = order[i]
            if len(chosen) + min(m - i, (top - u + 1) // 2) <= len(best):
                break
            if u <= last_u or v <= last_v or used >> u & 1 or used >> v & 1:
                continue
            chosen.append((u, v))
            if dfs(i + 1, u, v, used | 1 << u | 1 << v):
                return True
            chosen.pop()
        return False

    dfs(0, 0, 0, 0)
    return best


def _nonnest_size(edges: Sequence[Pair], cap: Optional[int] = None) -> int:
    return len(_nonnest_search(edges, cap))


def _noncross_size(edges: Sequence[Pair], cap: Optional[int] = None) -> int:
    if not edges:
        return 0
    n = max(v for _, v in edges)
    right: Dict[int, List[int]] = {}
    for u, v in sorted(edges):
        right.setdefault(u, []).append(v)
    f = [[0] * (n + 2) for _ in range(n + 2)]
    for i in range(n, 0, -1):
        row, below = f[i], f[i + 1]
        for j in range(i + 1, n + 1):
            best = below[j]
            for w in right.get(i, ()):
                if w > j:
                    break
                value = 1 + below[w - 1] + f[w + 1][j]
                if value > best:
                    best = value
            row[j] = best
    size = f[1][n]
    return min(size, cap) if cap is not None else size


_PAIRWISE_SIZE = {
    PatternKind.SEP: _sep_size,
    PatternKind.NEST: _nest_size,
    PatternKind.CROSS: _cross_size,
    PatternKind.NONSEP: _nonsep_size,
    PatternKind.NONNEST: _nonnest_size,
    PatternKind.NONCROSS: _noncross_size,
}


def _lexmin_witness(edges: Sequence[Pair], kind: PatternKind, target: int) -> List[Pair]:
    """Take each edge in lex order iff a full-size completion through it still exists"""
    allowed = ALLOWED_RELATIONS[kind]
    size_of = _PAIRWISE_SIZE[kind]
    chosen: List[Pair] = []
    candidates = sorted(edges)
    while len(chosen) < target:
        need = target - len(chosen) - 1
        for idx, (u, v) in enumerate(candidates):
            rest = [f for f in candidates[idx + 1:] if relation(u, v, f[0], f[1]) in allowed]
            if need == 0 or size_of(rest, need) >= need:
                chosen.append((u, v))
                candidates = rest
                break
        else:
            raise AssertionError(f"no {kind.value} completion of size {target}")
    return chosen


# ---------------------------------------------------------------------------
# split patterns: pairwise separated islands, each an inner-pattern matching
# ---------------------------------------------------------------------------


def _inner_table(edges: Sequence[Pair], n: int, inner: PatternKind) -> List[List[int]]:
    """table[a][b] = largest inner-pattern matching using only vertices in [a, b]"""
    table = [[0] * (n + 2) for _ in range(n + 2)]
    if inner is PatternKind.NEST:
        depths = _nest_depths(edges)
        for a in range(n, 0, -1):
            for b in range(a + 1, n + 1):
                table[a][b] = max(table[a + 1][b], table[a][b - 1], depths.get((a, b), 0))
        return table
    lefts = {u for u, _ in edges}
    rights = {v for _, v in edges}
    for a in range(n, 0, -1):
        for b in range(a + 1, n + 1):
            best = max(table[a + 1][b], table[a][b - 1])
            if a in lefts and b in rights and best < (b - a + 1) // 2:
                inside = [e for e in edges if a <= e[0] and e[1] <= b]
                best = max(best, _cross_size(inside))
            table[a][b] = best
    return table


def _split_islands(edges: Sequence[Pair], n: int, inner: PatternKind, groups: Groups) -> Tuple[int, List[Tuple[int, int]]]:
    table = _inner_table(edges, n, inner)
    if groups is Groups.TWO:
        best, split = table[1][n], None
        for s in range(1, n):
            value = table[1][s] + table[s + 1][n]
            if value > best:
                best, split = value, s
        if split is None:
            return best, [(1, n)] if best else []
        return best, [iv for iv in ((1, split), (split + 1, n)) if table[iv[0]][iv[1]]]
    best = [0] * (n + 1)
    choice: List[Optional[int]] = [None] * (n + 1)
    for j in range(1, n + 1):
        best[j] = best[j - 1]
        for i in range(1, j):
            if table[i][j] and best[i - 1] + table[i][j] > best[j]:
                best[j] = best[i - 1] + table[i][j]
                choice[j] = i
    islands = []
    j = n
    while j > 0:
        if choice[j] is None:
            j -= 1
        else:
            islands.append((choice[j], j))
            j = choice[j] - 1
    return best[n], islands[::-1]


def is_split_matching(edges: Sequence[Pair], inner: PatternKind, groups: Groups) -> bool:
    """Direct test: islands are inner-relation classes, all cross-island pairs separated"""
    inner_relation = N if inner is PatternKind.NEST else C
    parent = list(range(len(edges)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    rel = {}
    for i, j in combinations(range(len(edges)), 2):
        r = relation(*edges[i], *edges[j])
        if r is PairRelation.SHARED:
            return False
        rel[(i, j)] = r
        if r is inner_relation:
            parent[find(i)] = find(j)
    for (i, j), r in rel.items():
        same = find(i) == find(j)
        if same and r is not inner_relation:
            return False
        if not same and r is not S:
            return False
    islands = {find(i) for i in range(len(edges))}
    return groups is Groups.ANY or len(islands) <= 2


def max_split_pattern(graph: OrderedGraph, inner: PatternKind, groups: Groups,
                      cap: Optional[int] = None) -> Tuple[int, MatchingWitness]:
    """
    Largest matching made of pairwise separated inner-pattern islands

    Args:
        graph (OrderedGraph): Input graph
        inner (PatternKind): CROSS or NEST
        groups (Groups): TWO (at most two islands) or ANY
        cap (int, optional): Early-exit size

    Returns:
        Tuple[int, MatchingWitness]: Size and a witness recording its islands
    """
    inner, groups = PatternKind(inner), Groups(groups)
    if inner not in (PatternKind.CROSS, PatternKind.NEST):
        raise InvalidArgument(f"split islands must be cross or nest, got {inner.value}")
    edges = list(graph.edges)
    size, intervals = _split_islands(edges, graph.n, inner, groups)
    islands = []
    for a, b in intervals:
        inside = [e for e in edges if a <= e[0] and e[1] <= b]
        target = _PAIRWISE_SIZE[inner](inside)
        islands.append([Edge(*e) for e in _lexmin_witness(inside, inner, target)])
    if cap is not None and size > cap:
        size = cap
        kept, left = [], cap
        for island in islands:
            if left <= 0:
                break
            kept.append(island[:left])
            left -= len(kept[-1])
        islands = kept
    pattern = next((kind for kind, form in SPLIT_FORMS.items() if form == (inner, groups)), inner)
    flat = tuple(sorted(e for island in islands for e in island))
    return size, MatchingWitness(flat, pattern, tuple(tuple(island) for island in islands), (inner, groups))


def _split_size(edges: Sequence[Pair], kind: PatternKind, cap: Optional[int] = None) -> int:
    inner, groups = SPLIT_FORMS[kind]
    n = max((v for _, v in edges), default=0)
    size, _ = _split_islands(list(edges), n, inner, groups)
    return min(size, cap) if cap is not None else size


# ---------------------------------------------------------------------------
# alternating paths
# ---------------------------------------------------------------------------


def _alt_nested(e1: Pair, e2: Pair) -> bool:
    """Nested in the alternating-path sense; incident pairs must lie on one side"""
    shared = set(e1) & set(e2)
    if shared:
        if len(shared) == 2:
            return False
        c = shared.pop()
        a = e1[0] if e1[1] == c else e1[1]
        b = e2[0] if e2[1] == c else e2[1]
        return (a < c and b < c) or (a > c and b > c)
    return relation(*e1, *e2) is N


def _alt_states(edges: Sequence[Pair]) -> Tuple[Dict[Pair, int], Dict[int, Set[int]]]:
    """For each directed edge (a, b): longest converging continuation beyond b"""
    neighbours: Dict[int, Set[int]] = {}
    for u, v in edges:
        neighbours.setdefault(u, set()).add(v)
        neighbours.setdefault(v, set()).add(u)
    extra: Dict[Pair, int] = {}
    for u, v in sorted(edges, key=lambda e: (e[1] - e[0], e)):
        for a, b in ((u, v), (v, u)):
            best = 0
            for w in neighbours[b]:
                if u < w < v:
                    best = max(best, 1 + extra[(b, w)])
            extra[(a, b)] = best
    return extra, neighbours


def _alt_length(edges: Sequence[Pair], n: int) -> int:
    if not edges:
        return 1 if n >= 1 else 0
    extra, _ = _alt_states(edges)
    return 2 + max(extra.values())


def longest_alternating_path(graph: OrderedGraph) -> Tuple[int, PathWitness]:
    """
    Longest converging zigzag path

    Args:
        graph (OrderedGraph): Input graph

    Returns:
        Tuple[int, PathWitness]: t and the lexicographically smallest path of that length
    """
    edges = list(graph.edges)
    if not edges:
        return (1, PathWitness((1,))) if graph.n >= 1 else (0, PathWitness(()))
    extra, neighbours = _alt_states(edges)
    longest = max(extra.values())
    a, b = min(state for state, value in extra.items() if value == longest)
    path = [a, b]
    while extra[(a, b)]:
        lo, hi = min(a, b), max(a, b)
        w = min(w for w in neighbours[b] if lo < w < hi and 1 + extra[(b, w)] == extra[(a, b)])
        path.append(w)
        a, b = b, w
    return len(path), PathWitness(tuple(path))


def is_alternating_path(graph: OrderedGraph, vertices: Sequence[int]) -> bool:
    if len(set(vertices)) != len(vertices) or not vertices:
        return False
    if any(not 1 <= x <= graph.n for x in vertices):
        return False
    edges = []
    for a, b in zip(vertices, vertices[1:]):
        if not graph.has_edge(a, b):
            return False
        edges.append((min(a, b), max(a, b)))
    return all(_alt_nested(e, f) for e, f in combinations(edges, 2))


def _zigzag(subset: Sequence[int], from_left: bool) -> Tuple[int, ...]:
    lo, hi, take_left, out = 0, len(subset) - 1, from_left, []
    while lo <= hi:
        if take_left:
            out.append(subset[lo])
            lo += 1
        else:
            out.append(subset[hi])
            hi -= 1
        take_left = not take_left
    return tuple(out)


def iter_alternating_paths(m: int, t: int) -> Iterator[Tuple[int, ...]]:
    """Every copy of Alt-P_t in the complete graph on [m], as converging vertex sequences"""
    for subset in combinations(range(1, m + 1), t):
        yield _zigzag(subset, True)
        if t >= 3:
            yield _zigzag(subset, False)


def alt_peel(graph: OrderedGraph, rounds: int) -> List[OrderedGraph]:
    """
    Repeatedly delete one extreme edge per vertex

    G_{i+1} comes from G_i: every vertex v picks v+ simultaneously, the
    largest right neighbour when i is odd and the smallest left neighbour
    when i is even. All picked edges are then removed.

    Args:
        graph (OrderedGraph): G_0
        rounds (int): Number of rounds

    Returns:
        List[OrderedGraph]: G_0 ... G_rounds
    """
    if rounds < 0:
        raise InvalidArgument(f"rounds must be non-negative, got {rounds}")
    sequence = [graph]
    current = graph
    for i in range(rounds):
        picked = set()
        for v in range(1, current.n + 1):
            if i % 2:
                right = current.right_neighbors(v)
                if right:
                    picked.add((v, max(right)))
            else:
                left = current.left_neighbors(v)
                if left:
                    picked.add((min(left), v))
        current = current.without_edges(picked)
        sequence.append(current)
    return sequence


# ---------------------------------------------------------------------------
# public detector surface
# ---------------------------------------------------------------------------


def pattern_size(edges: Sequence[Pair], kind: PatternKind, cap: Optional[int] = None, n: Optional[int] = None) -> int:
    """
    Size of the largest pattern in a raw edge list

    For ALT_PATH this is the longest alternating path (vertex count);
    for every other kind the largest patterned matching.
    """
    kind = PatternKind(kind)
    if cap is not None and cap <= 0:
        return 0
    if kind is PatternKind.ALT_PATH:
        size = _alt_length(edges, n if n is not None else max((v for _, v in edges), default=0))
        return min(size, cap) if cap is not None else size
    if kind in _PAIRWISE_SIZE:
        return _PAIRWISE_SIZE[kind](edges, cap)
    return _split_size(edges, kind, cap)


def contains_pattern(edges: Sequence[Pair], spec: PatternSpec, n: Optional[int] = None) -> bool:
    return pattern_size(edges, spec.kind, cap=spec.size, n=n) >= spec.size


def creates_pattern(edges: Sequence[Pair], new_edge: Pair, spec: PatternSpec) -> bool:
    """
    Whether adding new_edge to a pattern-free edge list creates the pattern

    Pairwise kinds only re-test matchings through the new edge.
    """
    kind, k = spec.kind, spec.size
    if kind in ALLOWED_RELATIONS:
        if k == 1:
            return True
        allowed = ALLOWED_RELATIONS[kind]
        u, v = new_edge
        pool = [f for f in edges if relation(u, v, f[0], f[1]) in allowed]
        if len(pool) < k - 1:
            return False
        return _PAIRWISE_SIZE[kind](pool, k - 1) >= k - 1
    return contains_pattern(list(edges) + [tuple(new_edge)], spec)


def max_pattern_matching(graph: OrderedGraph, kind: PatternKind,
                         cap: Optional[int] = None) -> Tuple[int, MatchingWitness]:
    """
    Largest matching whose pairs all satisfy the kind's relation

    Args:
        graph (OrderedGraph): Input graph
        kind (PatternKind): One of the seven matching kinds
        cap (int, optional): Stop once this size is reached

    Returns:
        Tuple[int, MatchingWitness]: min(max, cap) and a lex-min witness of that size
    """
    kind = PatternKind(kind)
    if kind not in MATCHING_KINDS:
        raise Unsupported(f"{kind.value} is not a matching kind for this detector")
    if kind is PatternKind.SNN:
        return max_split_pattern(graph, PatternKind.CROSS, Groups.ANY, cap)
    edges = list(graph.edges)
    if cap is not None and cap <= 0:
        return 0, MatchingWitness((), kind)
    if kind is PatternKind.NONNEST:
        found = _nonnest_search(edges, cap)
        return len(found), MatchingWitness(tuple(Edge(*e) for e in found), kind)
    size = _PAIRWISE_SIZE[kind](edges, cap)
    witness = _lexmin_witness(edges, kind, size)
    return size, MatchingWitness(tuple(Edge(*e) for e in witness), kind)


def max_pattern(graph: OrderedGraph, spec_or_kind: Union[PatternSpec, PatternKind],
                cap: Optional[int] = None) -> int:
    """Size of the largest occurrence of any kind, ALT_PATH and M-families included"""
    kind = spec_or_kind.kind if isinstance(spec_or_kind, PatternSpec) else PatternKind(spec_or_kind)
    if kind is PatternKind.ALT_PATH:
        return longest_alternating_path(graph)[0]
    if kind in SPLIT_FORMS:
        inner, groups = SPLIT_FORMS[kind]
        return max_split_pattern(graph, inner, groups, cap)[0]
    return max_pattern_matching(graph, kind, cap)[0]


def brute_force_max(graph: OrderedGraph, spec: Union[PatternSpec, PatternKind],
                    budget: Optional[int] = DEFAULT_BUDGET) -> int:
    """
    Exhaustive oracle: enumerate matchings (or paths) directly

    Args:
        graph (OrderedGraph): Input graph
        spec: Pattern kind (the size of a PatternSpec is ignored)
        budget (int, optional): Node budget, None for unlimited

    Returns:
        int: Exact maximum

    Raises:
        BudgetExceeded: When the enumeration needs more nodes than allowed
    """
    kind = spec.kind if isinstance(spec, PatternSpec) else PatternKind(spec)
    nodes = 0
    best = 0

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"brute force exceeded {budget} nodes", nodes=nodes, partial=best)

    if kind is PatternKind.ALT_PATH:
        if not graph.edges:
            return 1 if graph.n else 0
        best = 2

        def extend(path: List[int], path_edges: List[Pair]) -> None:
            nonlocal best
            tick()
            best = max(best, len(path))
            for w in graph.neighbors(path[-1]):
                if w in path:
                    continue
                edge = (min(path[-1], w), max(path[-1], w))
                if all(_alt_nested(edge, f) for f in path_edges):
                    path.append(w)
                    path_edges.append(edge)
                    extend(path, path_edges)
                    path.pop()
                    path_edges.pop()

        for start in range(1, graph.n + 1):
            extend([start], [])
        return best

    order = list(graph.edges)
    m = len(order)
    if kind in ALLOWED_RELATIONS:
        allowed = ALLOWED_RELATIONS[kind]

        def fits(chosen: List[Pair], edge: Pair) -> bool:
            return all(relation(*edge, *f) in allowed for f in chosen)
    else:
        inner, groups = SPLIT_FORMS[kind]

        def fits(chosen: List[Pair], edge: Pair) -> bool:
            return is_split_matching(chosen + [edge], inner, groups)

    def walk(start: int, chosen: List[Pair]) -> None:
        nonlocal best
        tick()
        best = max(best, len(chosen))
        if len(chosen) + (m - start) <= best:
            return
        for j in range(start, m):
            if fits(chosen, order[j]):
                chosen.append(order[j])
                walk(j + 1, chosen)
                chosen.pop()

    walk(0, [])
    logger.debug("brute force %s on %r: %d after %d nodes", kind.value, graph, best, nodes)
    return best

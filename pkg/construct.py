#!/usr/bin/env python3
"""
Generators for the extremal and witness constructions
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from core import Edge, OrderedGraph, Transform, transform
from detect import PatternKind, PatternSpec
from errors import InvalidArgument, OutOfRange, WordLengthMismatch
import formulas


class Family(str, Enum):
    SEPARATED = "separated"
    NESTED_ALT = "nested_alt"
    NON_SEPARATED = "non_separated"
    CROSS_SEP = "cross_sep"
    NEST_SEP = "nest_sep"
    NEST_CROSS_SEP = "nest_cross_sep"
    HUB_LONG = "hub_long"
    APEX_CHAIN = "apex_chain"
    MSTAR = "mstar"


EXTREMAL_FAMILIES = (
    Family.SEPARATED, Family.NESTED_ALT, Family.NON_SEPARATED,
    Family.CROSS_SEP, Family.NEST_SEP, Family.NEST_CROSS_SEP,
)


class NonnestedVariant(str, Enum):
    APEX_CHAIN = "apex_chain"
    HUB_LONG = "hub_long"


class PartitionMode(str, Enum):
    SNN_TWO = "snn_two"
    SEP_LPLUS1 = "sep_lplus1"


@dataclass(frozen=True)
class Construction:
    family: Family
    n: int
    k: int
    graph: OrderedGraph
    forbidden: Tuple[PatternSpec, ...]
    claimed_count: int
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "k": self.k,
            "claimed_count": self.claimed_count,
            "edges": self.graph.e,
            "forbidden": [str(spec) for spec in self.forbidden],
            "note": self.note,
        }


def _clique(vertices: Iterable[int]) -> List[Tuple[int, int]]:
    return list(combinations(sorted(vertices), 2))


def _incident(hubs: Set[int], n: int) -> Set[Tuple[int, int]]:
    return {(u, v) for u, v in combinations(range(1, n + 1), 2) if u in hubs or v in hubs}


def _check_nk(n: int, k: int) -> None:
    for name, value in (("n", n), ("k", k)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidArgument(f"{name} must be an integer, got {value!r}")
    if k < 1:
        raise OutOfRange(f"k must be at least 1, got {k}")


def _separated(n: int, k: int) -> OrderedGraph:
    # blocks of sizes t_i - 1 separated by k - 1 hub vertices; drop edges inside a block
    q, r = divmod(n + 1, k)
    parts = [q + 1] * r + [q] * (k - r)
    block_of = {}
    vertex = 1
    for index, size in enumerate(parts):
        for _ in range(size - 1):
            block_of[vertex] = index
            vertex += 1
        if index < k - 1:
            vertex += 1
    edges = [(u, v) for u, v in combinations(range(1, n + 1), 2)
             if not (u in block_of and v in block_of and block_of[u] == block_of[v])]
    return OrderedGraph(n, edges)


def _nested_alt(n: int, k: int) -> OrderedGraph:
    return OrderedGraph(n, [(u, v) for u, v in combinations(range(1, n + 1), 2) if v - u <= 2 * k - 2])


def _non_separated(n: int, k: int) -> OrderedGraph:
    m0 = k + n % k
    edges = set(_clique(range(1, m0 + 1)))
    size = m0
    while size < n:
        size += k
        edges.update(_clique(range(size - 2 * k + 2, size + 1)))
    return OrderedGraph(n, edges)


def _cross_sep(n: int, k: int) -> OrderedGraph:
    hubs = [i * k for i in range(1, k)]
    edges = set()
    for u, v in combinations(range(1, n + 1), 2):
        if v - u >= k and u <= k - 1:
            edges.add((u, v))
        elif v - u <= k - 1 and any(u <= hub <= v for hub in hubs):
            edges.add((u, v))
    return OrderedGraph(n, edges)


def _nest_sep(n: int, k: int) -> OrderedGraph:
    hubs = set(range(1, k)) | set(range(n - k + 2, n + 1))
    return OrderedGraph(n, _incident(hubs, n))


def _nest_cross_sep(n: int, k: int) -> OrderedGraph:
    hubs = {1} | set(range(k + 1, 2 * k - 1))
    edges = _incident(hubs, n) | set(_clique(list(range(1, 2 * k - 1)) + [n]))
    return OrderedGraph(n, edges)


_GENERATORS = {
    Family.SEPARATED: _separated,
    Family.NESTED_ALT: _nested_alt,
    Family.NON_SEPARATED: _non_separated,
    Family.CROSS_SEP: _cross_sep,
    Family.NEST_SEP: _nest_sep,
    Family.NEST_CROSS_SEP: _nest_cross_sep,
}


def extremal_construction(family: Family, n: int, k: int) -> OrderedGraph:
    """
    Build the extremal graph of a family

    Args:
        family (Family): One of the six extremal families
        n (int): Vertex count
        k (int): Matching size (the family avoids k-matchings, or 2k-paths)

    Returns:
        OrderedGraph: The construction on [n]
    """
    family = Family(family)
    if family not in _GENERATORS:
        raise InvalidArgument(f"{family.value} is not an extremal family; see nonnested_construction")
    _check_nk(n, k)
    if family is Family.NON_SEPARATED:
        if n < k:
            raise OutOfRange(f"non_separated needs n >= k, got n={n}, k={k}")
    elif n < 2 * k:
        raise OutOfRange(f"{family.value} needs n >= 2k, got n={n}, k={k}")
    if family is Family.NEST_CROSS_SEP and k < 3:
        raise OutOfRange(f"nest_cross_sep needs k >= 3, got k={k}")
    return _GENERATORS[family](n, k)


def central_hubs(n: int, k: int) -> List[int]:
    """The k-1 most central vertices of [k, n-k+1]"""
    room = n - 2 * k + 2
    start = k + (room - (k - 1)) // 2
    return list(range(start, start + k - 1))


def nonnested_construction(variant: NonnestedVariant, n: int, k: int,
                           word: Optional[str] = None,
                           hubs: Optional[Sequence[int]] = None) -> OrderedGraph:
    """
    (k-1)n-edge graphs without a non-nested k-matching

    APEX_CHAIN starts from a clique on 2k-1 vertices and reads the word:
    '1' adds a vertex joined to [k-1], '2' reverses the order. The number of
    '1' letters must equal n - (2k-1). HUB_LONG joins k-1 hub vertices in
    [k, n-k+1] to everything and adds every edge of length at least n-k+1.

    Args:
        variant (NonnestedVariant): APEX_CHAIN or HUB_LONG
        n (int): Vertex count
        k (int): Matching size
        word (str, optional): Letters over {1, 2}; defaults to all '1'
        hubs (Sequence[int], optional): Override for the HUB_LONG hub vertices

    Returns:
        OrderedGraph: The construction
    """
    variant = NonnestedVariant(variant)
    _check_nk(n, k)
    if variant is NonnestedVariant.APEX_CHAIN:
        base = 2 * k - 1
        if n < base:
            raise OutOfRange(f"apex_chain needs n >= 2k-1, got n={n}, k={k}")
        word = "1" * (n - base) if word is None else word
        if set(word) - {"1", "2"}:
            raise InvalidArgument(f"word {word!r} may only contain the letters 1 and 2")
        if word.count("1") != n - base:
            raise WordLengthMismatch(
                f"word {word!r} adds {word.count('1')} vertices but n - (2k-1) = {n - base}")
        graph = OrderedGraph.complete(base)
        for letter in word:
            if letter == "1":
                graph = transform(graph, Transform.APEX, k - 1)
            else:
                graph = transform(graph, Transform.REVERSE)
        return graph
    if n < 3 * (k - 1):
        raise OutOfRange(f"hub_long needs n >= 3(k-1), got n={n}, k={k}")
    chosen = central_hubs(n, k) if hubs is None else sorted(hubs)
    if len(set(chosen)) != k - 1 or any(not k <= h <= n - k + 1 for h in chosen):
        raise OutOfRange(f"hub_long needs {k - 1} distinct hubs in [{k}, {n - k + 1}], got {chosen}")
    edges = _incident(set(chosen), n)
    edges.update((u, v) for u, v in combinations(range(1, n + 1), 2) if v - u >= n - k + 1)
    return OrderedGraph(n, edges)


def mstar_construction(n: int, k: int) -> OrderedGraph:
    """
    Dyadic construction without two separated crossing matchings of total size k

    E1: every edge touching [k-2]. E2: edges (x, x + 2^i) with 2^(i+1) < k
    and x = t * 2^i + 1.
    """
    _check_nk(n, k)
    if k < 3 or n < 2 * k:
        raise OutOfRange(f"mstar needs k >= 3 and n >= 2k, got n={n}, k={k}")
    edges = _incident(set(range(1, k - 1)), n)
    step = 1
    while 2 * step < k:
        edges.update((x, x + step) for x in range(1, n - step + 1, step))
        step *= 2
    return OrderedGraph(n, edges)


def distance_class_partition(n: int, ell: int, mode: PartitionMode) -> List[List[Edge]]:
    """
    Split the length-ell edges of K_n into patterned matchings

    Args:
        n (int): Vertex count
        ell (int): Edge length, 1 <= ell <= n-1
        mode (PartitionMode): SNN_TWO gives two strongly non-nested matchings,
            SEP_LPLUS1 gives ell+1 separated matchings

    Returns:
        List[List[Edge]]: The parts, in order
    """
    mode = PartitionMode(mode)
    if not 1 <= ell <= n - 1:
        raise OutOfRange(f"need 1 <= ell <= n-1, got ell={ell}, n={n}")
    edges = [Edge(x, x + ell) for x in range(1, n - ell + 1)]
    if mode is PartitionMode.SNN_TWO:
        first = [e for e in edges if (e.u - 1) % (2 * ell) < ell]
        second = [e for e in edges if (e.u - 1) % (2 * ell) >= ell]
        return [first, second]
    classes: List[List[Edge]] = [[] for _ in range(ell + 1)]
    for e in edges:
        classes[(e.u - 1) % (ell + 1)].append(e)
    return classes


def closure_violations(graph: OrderedGraph) -> List[Tuple[int, int]]:
    """Missing edges (a, b) lying inside some present edge (x, y)"""
    missing = []
    for a, b in combinations(range(1, graph.n + 1), 2):
        if graph.has_edge(a, b):
            continue
        if any(x <= a and b <= y for x, y in graph.edges):
            missing.append((a, b))
    return missing


def is_closure_closed(graph: OrderedGraph) -> bool:
    return not closure_violations(graph)


def _spec(kind: PatternKind, size: int) -> PatternSpec:
    return PatternSpec(kind, size)


def describe_construction(family: Family, n: int, k: int, word: Optional[str] = None) -> Construction:
    """
    Build a construction together with what it is meant to avoid and its claimed edge count

    The claimed count is the closed-form value for exact families and the
    construction's own arithmetic count otherwise.
    """
    family = Family(family)
    K = PatternKind
    if family is Family.HUB_LONG or family is Family.APEX_CHAIN:
        variant = NonnestedVariant(family.value)
        graph = nonnested_construction(variant, n, k, word=word)
        return Construction(family, n, k, graph, (_spec(K.NONNEST, k),), (k - 1) * n,
                            "(k-1)n lower bound for non-nested matchings")
    if family is Family.MSTAR:
        graph = mstar_construction(n, k)
        comparison = formulas.mstar_comparison(n, k)
        note = (f"beats (k-1)n: {comparison['beats_linear']}; "
                f"within printed bound: {comparison['within_printed_bound']}")
        return Construction(family, n, k, graph, (_spec(K.MSTAR, k),),
                            formulas.mstar_lower_bound(n, k), note)
    graph = extremal_construction(family, n, k)
    if family is Family.SEPARATED:
        forbidden = (_spec(K.SEP, k),)
        value = formulas.extremal_value(forbidden, n)
        return Construction(family, n, k, graph, forbidden, value.value,
                            "complement of cliques around k-1 hub vertices")
    if family is Family.NESTED_ALT:
        forbidden = (_spec(K.ALT_PATH, 2 * k), _spec(K.NEST, k))
        return Construction(family, n, k, graph, forbidden, formulas.nest_value(n, k),
                            "all edges of length at most 2k-2")
    if family is Family.NON_SEPARATED:
        forbidden = (_spec(K.NONSEP, k),)
        return Construction(family, n, k, graph, forbidden, formulas.nonsep_value(n, k),
                            f"base clique on {k + n % k} vertices (k + n mod k), then steps of k")
    if family is Family.CROSS_SEP:
        forbidden = (_spec(K.CROSS, k), _spec(K.SEP, k))
        claimed = formulas.cross_sep_construction_count(n, k)
        return Construction(family, n, k, graph, forbidden, claimed,
                            "long edges from [k-1] plus short edges covering the hubs ik")
    if family is Family.NEST_SEP:
        forbidden = (_spec(K.NEST, k), _spec(K.SEP, k))
        return Construction(family, n, k, graph, forbidden, formulas.nest_value(n, k),
                            "edges touching [k-1] or [n-k+2, n]")
    forbidden = (_spec(K.NEST, k), _spec(K.CROSS, k), _spec(K.SEP, k))
    return Construction(family, n, k, graph, forbidden, (k - 1) * n,
                        "edges touching {1} and [k+1, 2k-2] plus a clique on [2k-2] and n")

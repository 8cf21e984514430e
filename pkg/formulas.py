#!/usr/bin/env python3
"""
Closed-form extremal values, Turán-graph arithmetic, edge-length and Ramsey bounds
"""

from dataclasses import dataclass, field
from enum import Enum
from math import comb, isqrt
from typing import Dict, FrozenSet, Iterable, Optional, Tuple, Union

from detect import PatternKind, PatternSpec
from errors import InvalidArgument, OutOfRange, UnsupportedSet

K = PatternKind


class ExtremalKind(str, Enum):
    EXACT = "EXACT"
    INTERVAL = "INTERVAL"
    LOWER_ONLY = "LOWER_ONLY"
    CONDITIONAL = "CONDITIONAL"
    DISPUTED = "DISPUTED"


@dataclass(frozen=True)
class ExtremalValue:
    lo: int
    hi: int
    kind: ExtremalKind
    provenance: str
    note: Optional[str] = None
    candidates: Dict[str, int] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvalidArgument(f"extremal interval [{self.lo}, {self.hi}] is empty")
        if self.kind is ExtremalKind.EXACT and self.lo != self.hi:
            raise InvalidArgument("an exact value needs lo == hi")

    @property
    def value(self) -> int:
        """The single value reported for EXACT and DISPUTED entries"""
        return self.lo

    def contains(self, value: int) -> bool:
        if self.kind is ExtremalKind.DISPUTED:
            return value in self.candidates.values()
        return self.lo <= value <= self.hi

    def describe(self) -> str:
        if self.kind is ExtremalKind.DISPUTED:
            return ";".join(f"{name}-form={value}" for name, value in sorted(self.candidates.items()))
        if self.lo == self.hi:
            return str(self.lo)
        return f"[{self.lo},{self.hi}]"

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "kind": self.kind.value,
                "provenance": self.provenance, "note": self.note}


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.value == other
        if isinstance(other, Residue):
            return (self.value, self.modulus) == (other.value, other.modulus)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))


def _check_int(**values: int) -> None:
    for name, value in values.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidArgument(f"{name} must be an integer, got {value!r}")


def residue(N: int, k: int) -> Residue:
    """N mod k, in [0, k-1]"""
    _check_int(N=N, k=k)
    if k <= 0:
        raise InvalidArgument(f"modulus must be positive, got {k}")
    return Residue(N % k, k)


def turan_edges(n: int, k: int) -> int:
    """
    Edge count of the balanced complete k-partite graph on n vertices

    Args:
        n (int): Vertex count
        k (int): Number of parts, 1 <= k <= n

    Returns:
        int: C(n,2) minus the edges inside the parts
    """
    _check_int(n=n, k=k)
    if k < 1 or k > n:
        raise InvalidArgument(f"need 1 <= k <= n, got n={n}, k={k}")
    q, r = divmod(n, k)
    return comb(n, 2) - r * comb(q + 1, 2) - (k - r) * comb(q, 2)


# ---------------------------------------------------------------------------
# single-pattern values
# ---------------------------------------------------------------------------


def sep_value(n: int, k: int) -> int:
    return turan_edges(n + 1, k) - k + 1


def nest_value(n: int, k: int) -> int:
    """Shared by nested, crossing and alternating 2k-paths"""
    return 2 * (k - 1) * n - (k - 1) * (2 * k - 1)


def noncross_value(n: int, k: int) -> int:
    return (k - 1) * n


def nonnest_bounds(n: int, k: int) -> Tuple[int, int]:
    return (k - 1) * n, (k - 1) * n + comb(k - 1, 2)


def nonsep_forms(n: int, k: int) -> Dict[str, int]:
    """
    The three closed forms for the non-separated maximum

    ceiling: step count rounded up plus a residual clique
    residue: the compact form in terms of (n+1) mod k
    base_clique: counted from the recursive construction with base k + (n mod k)
    """
    r = (n + 1) % k
    block = comb(2 * k - 1, 2) - comb(k - 1, 2)
    steps = -((-(n - 2 * k + 1)) // k)
    m0 = k + n % k
    return {
        "ceiling": steps * block + comb(2 * k - 1 - r, 2),
        "residue": (3 * (k - 1) * n - (2 * k - 1 - r) * (k - 1 + r)) // 2,
        "base_clique": comb(m0, 2) + ((n - m0) // k) * block,
    }


def nonsep_value(n: int, k: int) -> int:
    return nonsep_forms(n, k)["residue"]


def cross_sep_value(n: int, k: int) -> int:
    return (k - 1) * n - comb(2 * k - 1, 2) + comb(k, 2) + (k - 1) * (comb(k + 1, 2) - 1)


def cross_sep_construction_count(n: int, k: int) -> int:
    """Edges of the long/short construction restricted to [n]"""
    long_edges = sum(max(0, n - x - k + 1) for x in range(1, k))
    short_edges = 0
    for i in range(1, k):
        hub = i * k
        for length in range(1, k):
            lo, hi = max(1, hub - length), min(hub, n - length)
            short_edges += max(0, hi - lo + 1)
    return long_edges + short_edges


def mstar_lower_bound(n: int, k: int) -> int:
    """Edge count of the two-crossing-matchings construction, computed arithmetically"""
    if k < 3 or n < 2 * k:
        raise OutOfRange(f"the construction needs k >= 3 and n >= 2k, got n={n}, k={k}")
    hubs = k - 2
    incident = hubs * (n - 1) - comb(hubs, 2)
    dyadic, overlap = 0, 0
    step = 1
    while 2 * step < k:
        dyadic += (n - 1) // step
        overlap += (k - 3) // step + 1
        step *= 2
    return incident + dyadic - overlap


def mstar_comparison(n: int, k: int) -> Dict[str, float]:
    """Construction count next to (k-1)n and the printed (k - 2^-(k-2))n bound"""
    count = mstar_lower_bound(n, k)
    return {
        "construction": count,
        "linear": (k - 1) * n,
        "printed_bound": (k - 2 ** -(k - 2)) * n,
        "beats_linear": count > (k - 1) * n,
        "within_printed_bound": count <= (k - 2 ** -(k - 2)) * n,
    }


# ---------------------------------------------------------------------------
# extremal_value dispatch
# ---------------------------------------------------------------------------


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise OutOfRange(message)


def _single(kind: PatternKind, n: int, k: int) -> ExtremalValue:
    if kind is K.NONSEP:
        _require(n >= k, f"the non-separated value needs n >= k, got n={n}, k={k}")
        forms = nonsep_forms(n, k)
        value = forms["residue"]
        if forms["ceiling"] == value:
            return ExtremalValue(value, value, ExtremalKind.EXACT,
                                 "non-separated recursive clique construction")
        note = f"ceiling-form={forms['ceiling']}; residue-form={value}; base-clique-form={forms['base_clique']}"
        return ExtremalValue(value, value, ExtremalKind.DISPUTED,
                             "non-separated closed forms disagree", note,
                             {"ceiling": forms["ceiling"], "residue": value})
    _require(n >= 2 * k, f"{kind.value} values need n >= 2k, got n={n}, k={k}")
    if kind is K.SEP:
        value = sep_value(n, k)
        return ExtremalValue(value, value, ExtremalKind.EXACT, "separated: e(T(n+1,k)) - k + 1 (arch layouts)")
    if kind in (K.NEST, K.CROSS):
        value = nest_value(n, k)
        source = "nested: queue layouts" if kind is K.NEST else "crossing: Capoyleas-Pach"
        return ExtremalValue(value, value, ExtremalKind.EXACT, source)
    if kind is K.NONCROSS:
        value = noncross_value(n, k)
        return ExtremalValue(value, value, ExtremalKind.EXACT, "non-crossing: Kupitz")
    if kind in (K.NONNEST, K.SNN):
        lo, hi = nonnest_bounds(n, k)
        kind_of = ExtremalKind.EXACT if lo == hi else ExtremalKind.INTERVAL
        return ExtremalValue(lo, hi, kind_of, f"{kind.value}: (k-1)n sandwich via distance classes",
                             None if lo == hi else "lower end conjectured exact")
    if kind is K.MSTARSTAR:
        value = noncross_value(n, k)
        return ExtremalValue(value, value, ExtremalKind.EXACT, "two nested matchings: (k-1)n")
    if kind is K.MSTAR:
        _require(k >= 3, f"the two-crossing-matchings bound needs k >= 3, got k={k}")
        return ExtremalValue(mstar_lower_bound(n, k), nest_value(n, k), ExtremalKind.LOWER_ONLY,
                             "two crossing matchings: dyadic construction below, crossing bound above")
    raise UnsupportedSet(f"no closed form for {kind.value}")


def _composite(kinds: FrozenSet[PatternKind], n: int, k: int) -> ExtremalValue:
    _require(n >= 2 * k, f"composite values need n >= 2k, got n={n}, k={k}")
    if kinds == {K.CROSS, K.SEP}:
        value = cross_sep_value(n, k)
        if n >= 2 * k * k:
            return ExtremalValue(value, value, ExtremalKind.EXACT, "crossing+separated: long/short edge count")
        lo = min(cross_sep_construction_count(n, k), value)
        return ExtremalValue(lo, value, ExtremalKind.CONDITIONAL,
                             "crossing+separated: upper bound proven, equality needs n >= 2k^2")
    if kinds == {K.NEST, K.SEP}:
        value = nest_value(n, k)
        return ExtremalValue(value, value, ExtremalKind.EXACT, "nested+separated equals nested")
    if kinds == {K.NEST, K.CROSS, K.SEP}:
        _require(k >= 3, f"the three-pattern interval needs k >= 3, got k={k}")
        return ExtremalValue((k - 1) * n, cross_sep_value(n, k), ExtremalKind.INTERVAL,
                             "nested+crossing+separated: (k-1)n construction, crossing+separated above",
                             "whether (k-1)n is exact is open")
    if kinds == {K.NEST, K.CROSS}:
        return ExtremalValue(nonsep_value(n, k), nest_value(n, k), ExtremalKind.INTERVAL,
                             "nested+crossing: non-separated construction below, nested bound above",
                             "whether the lower end is exact is open")
    raise UnsupportedSet("unsupported forbidden set {" + ", ".join(sorted(k.value for k in kinds)) + "}")


def normalize_forbidden(forbidden: Union[PatternSpec, Iterable[PatternSpec]]) -> Tuple[PatternSpec, ...]:
    specs = [forbidden] if isinstance(forbidden, PatternSpec) else list(forbidden)
    if not specs:
        raise InvalidArgument("the forbidden set is empty")
    return tuple(sorted(set(specs), key=PatternSpec.sort_key))


def extremal_value(forbidden: Union[PatternSpec, Iterable[PatternSpec]], n: int) -> ExtremalValue:
    """
    Closed-form maximum edge count avoiding every forbidden pattern

    Args:
        forbidden: One PatternSpec or a set of them sharing the same size
        n (int): Vertex count

    Returns:
        ExtremalValue: Value or interval, tagged with its provenance

    Raises:
        UnsupportedSet: No closed form is known for the combination
        OutOfRange: n below the threshold where the closed form holds
    """
    _check_int(n=n)
    specs = normalize_forbidden(forbidden)
    sizes = {spec.size for spec in specs}
    if len(sizes) != 1:
        raise UnsupportedSet("mixed pattern sizes in one forbidden set are not supported")
    k = sizes.pop()
    kinds = frozenset(spec.kind for spec in specs)
    if kinds == {K.ALT_PATH}:
        if k % 2:
            raise UnsupportedSet(f"alternating paths need an even vertex count, got t={k}")
        _require(n >= k, f"alternating-path values need n >= t, got n={n}, t={k}")
        value = nest_value(n, k // 2)
        return ExtremalValue(value, value, ExtremalKind.EXACT, "alternating 2k-path: peeling bound")
    if K.ALT_PATH in kinds:
        raise UnsupportedSet("alternating paths cannot be combined with matchings")
    if len(kinds) == 1:
        return _single(next(iter(kinds)), n, k)
    return _composite(kinds, n, k)


def proven_upper_bound(forbidden: Union[PatternSpec, Iterable[PatternSpec]], n: int) -> Optional[int]:
    """
    Smallest proven upper bound over members of the forbidden set, or None

    Disputed entries are skipped; conditional ones still have a proven upper end.
    """
    bounds = []
    for spec in normalize_forbidden(forbidden):
        try:
            value = extremal_value(spec, n)
        except (UnsupportedSet, OutOfRange):
            continue
        if value.kind in (ExtremalKind.EXACT, ExtremalKind.INTERVAL,
                          ExtremalKind.CONDITIONAL, ExtremalKind.LOWER_ONLY):
            bounds.append(value.hi)
    try:
        whole = extremal_value(forbidden, n)
        if whole.kind is not ExtremalKind.DISPUTED:
            bounds.append(whole.hi)
    except (UnsupportedSet, OutOfRange):
        pass
    return min(bounds) if bounds else None


# ---------------------------------------------------------------------------
# edge-length and Ramsey bounds
# ---------------------------------------------------------------------------


class LengthBound(str, Enum):
    LONG_CROSS = "LONG_CROSS"
    SHORT_SNN = "SHORT_SNN"
    SHORT_SEP = "SHORT_SEP"


def edge_length_bound(kind: LengthBound, n: int, k: int, ell: Optional[int] = None) -> int:
    """
    Caps on how many edges of a given length class a pattern-free graph can hold

    LONG_CROSS: edges of length >= k with no crossing k-matching.
    SHORT_SNN: edges of length < k with no strongly non-nested k-matching.
    SHORT_SEP: edges of one length ell <= k-1 with no separated k-matching.
    """
    kind = LengthBound(kind)
    _require(n >= 2 * k, f"length bounds need n >= 2k, got n={n}, k={k}")
    if kind is LengthBound.LONG_CROSS:
        return (k - 1) * n - comb(2 * k - 1, 2) + comb(k, 2)
    if kind is LengthBound.SHORT_SNN:
        return 2 * (k - 1) ** 2
    if ell is None or not 1 <= ell <= k - 1:
        raise OutOfRange(f"SHORT_SEP needs 1 <= ell <= k-1, got ell={ell}, k={k}")
    return (ell + 1) * (k - 1)


class RamseyBoundKind(str, Enum):
    ALT_UPPER = "ALT_UPPER"
    ALT_PREVIOUS = "ALT_PREVIOUS"
    ALT_PIGEONHOLE = "ALT_PIGEONHOLE"
    NONNEST_LOWER = "NONNEST_LOWER"
    NONNEST_UPPER = "NONNEST_UPPER"
    NONNEST_CONDITIONAL = "NONNEST_CONDITIONAL"


@dataclass(frozen=True)
class RamseyBound:
    value: int
    flags: Tuple[str, ...] = ()
    is_upper: bool = True

    def __int__(self) -> int:
        return self.value


def _alt_pigeonhole(t: int) -> int:
    k = t // 2
    reserved = 4 * comb(k - 1, 2)
    m = 2 * k - 1
    while True:
        nxt = m + 1
        red = reserved + -(-(comb(nxt, 2) - reserved) // 2)
        if red > nest_value(nxt, k):
            return nxt
        m = nxt


def ramsey_bound(kind: RamseyBoundKind, param: int) -> RamseyBound:
    """
    Published and derived bounds on ordered Ramsey numbers

    Args:
        kind (RamseyBoundKind): Which bound
        param (int): t for the ALT_* bounds, k for the NONNEST_* bounds

    Returns:
        RamseyBound: The value with any caveat flags
    """
    kind = RamseyBoundKind(kind)
    _check_int(param=param)
    if kind is RamseyBoundKind.ALT_UPPER:
        _require(param >= 2, f"ALT_UPPER needs t >= 2, got {param}")
        return RamseyBound(3 * param + 3)
    if kind is RamseyBoundKind.ALT_PREVIOUS:
        _require(param >= 2, f"ALT_PREVIOUS needs t >= 2, got {param}")
        return RamseyBound(2 * param - 3 + isqrt(2 * param * param - 8 * param + 11))
    if kind is RamseyBoundKind.ALT_PIGEONHOLE:
        _require(param >= 4 and param % 2 == 0, f"ALT_PIGEONHOLE needs an even t >= 4, got {param}")
        return RamseyBound(_alt_pigeonhole(param), ("recolouring plus Turán count",))
    if kind is RamseyBoundKind.NONNEST_LOWER:
        _require(param >= 2, f"NONNEST_LOWER needs k >= 2, got {param}")
        return RamseyBound(3 * param - 1, ("conjectured tight",), is_upper=False)
    if kind is RamseyBoundKind.NONNEST_UPPER:
        _require(param >= 3, f"NONNEST_UPPER needs k >= 3, got {param}")
        return RamseyBound(4 * param - 6, ("unpublished citation",))
    _require(param >= 2, f"NONNEST_CONDITIONAL needs k >= 2, got {param}")
    # largest n with n^2 - 4kn + k^2 <= 0, i.e. floor((2 + sqrt 3) k)
    return RamseyBound(2 * param + isqrt(3 * param * param),
                       ("conditional on the (k-1)n non-nested conjecture",))


def residue_pair_cost(n1: int, n2: int, k: int) -> int:
    """C(2k-1-n1, 2) + C(2k-1-n2, 2); moving one unit from n1 to n2 never lowers it"""
    _check_int(n1=n1, n2=n2, k=k)
    if not (0 <= n1 <= 2 * k - 1 and 0 <= n2 <= 2 * k - 1):
        raise OutOfRange(f"need 0 <= n1, n2 <= 2k-1, got n1={n1}, n2={n2}, k={k}")
    return comb(2 * k - 1 - n1, 2) + comb(2 * k - 1 - n2, 2)

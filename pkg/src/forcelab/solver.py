"""Exact zero forcing numbers, with certificates, and exact path cover numbers."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import UnsupportedError
from .forcing import closure_bits
from .forts import Fort, FortKind, minimize_fort_bits
from .graph import Graph, VertexSet, iter_bits, popcount

EXHAUSTIVE_CAP = 30
PATH_COVER_CAP = 15
ENUMERATE_CAP = 16


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("FORCELAB_THREADS", "1")))
    except ValueError:
        return 1


@dataclass
class SolveStats:
    nodes: int = 0
    closures: int = 0
    wall_time: float = 0.0
    iterations: int = 0

    def to_json(self) -> dict:
        return {
            "nodes": self.nodes,
            "closures": self.closures,
            "wall_time": round(self.wall_time, 6),
            "iterations": self.iterations,
        }


@dataclass
class SolveReport:
    """Result of an exact solve.

    ``z`` is the zero forcing number when ``complete``; after an interrupt it is
    the best upper bound known and ``lower_bound`` is the proven lower bound.
    """

    z: int
    witness: VertexSet
    algorithm: str
    lower_bound_forts: list[Fort] = field(default_factory=list)
    stats: SolveStats = field(default_factory=SolveStats)
    complete: bool = True
    lower_bound: int | None = None

    def __post_init__(self) -> None:
        if self.lower_bound is None:
            self.lower_bound = self.z

    def to_json(self, graph_name: str = "") -> dict:
        return {
            "graph": graph_name,
            "z": self.z,
            "witness": self.witness.to_list(),
            "algorithm": self.algorithm,
            "lower_bound_forts": [f.to_list() for f in self.lower_bound_forts],
            "complete": self.complete,
            "lower_bound": self.lower_bound,
            "stats": self.stats.to_json(),
        }


# Exhaustive search ----------------------------------------------------------------

def _first_forcing_subset(masks: Sequence[int], n: int, k: int, first: int | None) -> tuple[tuple[int, ...] | None, int]:
    """Lex-first forcing ``k``-subset, optionally restricted to a given smallest element."""
    full = (1 << n) - 1
    tried = 0
    if first is None:
        groups = [(0, (), range(n))]
    else:
        groups = [(1 << first, (first,), range(first + 1, n))]
    for base, prefix, rest in groups:
        need = k - len(prefix)
        for combo in combinations(rest, need):
            tried += 1
            bits = base
            for v in combo:
                bits |= 1 << v
            if closure_bits(masks, bits) == full:
                return prefix + combo, tried
    return None, tried


def solve_exhaustive(g: Graph, cap: int = EXHAUSTIVE_CAP, threads: int = 1) -> SolveReport:
    """Smallest zero forcing set by trying subsets of size 0, 1, 2, ... in lex order.

    With ``threads > 1`` each size class is split by smallest element across a
    process pool; the lex-first witness is still the one reported.
    """
    if g.n > cap:
        raise UnsupportedError(
            f"exhaustive search limited to {cap} vertices (graph has {g.n}); use solve_fortbb"
        )
    start = time.perf_counter()
    stats = SolveStats()
    masks = g.masks
    pool = ProcessPoolExecutor(max_workers=threads) if threads > 1 and g.n > 1 else None
    try:
        for k in range(g.n + 1):
            if pool is None or k == 0:
                hit, tried = _first_forcing_subset(masks, g.n, k, None)
                stats.nodes += tried
            else:
                futures = [pool.submit(_first_forcing_subset, masks, g.n, k, f) for f in range(g.n - k + 1)]
                hit = None
                for fut in futures:
                    found, tried = fut.result()
                    stats.nodes += tried
                    if found is not None and hit is None:
                        hit = found
            if hit is not None:
                stats.closures = stats.nodes
                stats.wall_time = time.perf_counter() - start
                return SolveReport(k, VertexSet(g.n, hit), "exhaustive", stats=stats)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    raise AssertionError("V(G) is always zero forcing")


# Fort-based branch and bound ------------------------------------------------------------

def lower_bound_disjoint_forts(g: Graph, forts: Sequence[Fort]) -> int:
    """Size of a greedily packed family of pairwise disjoint forts.

    Each fort in the family needs its own vertex in any zero forcing set, so
    the result never exceeds ``Z(g)``.
    """
    return _packing([f.vertices.bits for f in forts])


def _packing(forts: Sequence[int], forbidden: int = 0) -> int:
    used = 0
    count = 0
    for f in sorted((f & ~forbidden for f in forts), key=popcount):
        if not f & used:
            used |= f
            count += 1
    return count


def _greedy_forcing_set(g: Graph) -> int:
    """A small zero forcing set: grow by max-degree vertices, then drop redundant ones."""
    full = (1 << g.n) - 1
    order = sorted(range(g.n), key=lambda v: (-len(g.adjacency[v]), v))
    bits = 0
    for v in order:
        if closure_bits(g.masks, bits) == full:
            break
        if not closure_bits(g.masks, bits) >> v & 1:
            bits |= 1 << v
    for v in sorted(iter_bits(bits), key=lambda v: (len(g.adjacency[v]), v)):
        if closure_bits(g.masks, bits & ~(1 << v)) == full:
            bits &= ~(1 << v)
    return bits


class _Interrupted(Exception):
    pass


class _FortSearch:
    """Depth-first search for a zero forcing set of size at most ``k``.

    Only hitting sets of the current fort collection are explored. When a
    hitting set fails to force, the stalled white region is shrunk to a
    minimal fort, added to the collection and the search continues from the
    same node.
    """

    def __init__(self, g: Graph, stats: SolveStats, deadline: float | None) -> None:
        self.g = g
        self.masks = g.masks
        self.full = (1 << g.n) - 1
        self.forts: list[int] = []
        self.stats = stats
        self.deadline = deadline

    def search(self, k: int) -> int | None:
        return self._dfs(0, 0, 0, k, [], 0)

    def _dfs(self, chosen: int, forbidden: int, size: int, k: int, uncovered: list[int], seen: int) -> int | None:
        self.stats.nodes += 1
        if self.deadline is not None and self.stats.nodes % 256 == 0 and time.perf_counter() > self.deadline:
            raise _Interrupted
        forts = self.forts
        # forts found since the parent filtered its list
        uncovered = uncovered + [f for f in forts[seen:] if not f & chosen]
        seen = len(forts)
        if not uncovered:
            self.stats.closures += 1
            blue = closure_bits(self.masks, chosen)
            if blue == self.full:
                return chosen
            white = self.full & ~blue
            self.stats.closures += popcount(white)
            forts.append(minimize_fort_bits(self.masks, self.g.n, white))
            uncovered = forts[seen:]
            seen = len(forts)
        if size + _packing(uncovered, forbidden) > k:
            return None
        # smallest uncovered fort; try members that hit the most uncovered forts first
        target = min(uncovered, key=lambda f: popcount(f & ~forbidden))
        options = list(iter_bits(target & ~forbidden))
        options.sort(key=lambda v: -sum(1 for f in uncovered if f >> v & 1))
        for v in options:
            bit = 1 << v
            if len(forts) > seen:
                uncovered = uncovered + [f for f in forts[seen:] if not f & chosen]
                seen = len(forts)
            child = [f for f in uncovered if not f & bit]
            found = self._dfs(chosen | bit, forbidden, size + 1, k, child, seen)
            if found is not None:
                return found
            forbidden |= bit
        return None


def solve_fortbb(g: Graph, time_limit: float | None = None, threads: int = 1) -> SolveReport:
    """Exact ``Z(g)`` by lazily collecting forts and searching their hitting sets.

    A set is zero forcing iff it meets every fort, so a minimum hitting set of
    the collected forts that also forces is optimal. Bounds ``k = 0, 1, ...``
    are tried in turn; failure at ``k`` proves no set of size ``k`` meets all
    collected forts, and that collection is returned as the lower-bound
    certificate. ``threads`` is accepted for interface symmetry; this search is
    sequential.
    """
    start = time.perf_counter()
    stats = SolveStats()
    deadline = None if time_limit is None else start + time_limit
    full = (1 << g.n) - 1
    upper = _greedy_forcing_set(g) if g.n else 0
    search = _FortSearch(g, stats, deadline)
    k = 0
    try:
        while k < popcount(upper):
            stats.iterations += 1
            found = search.search(k)
            if found is not None:
                upper = found
                break
            k += 1
    except (_Interrupted, KeyboardInterrupt):
        stats.wall_time = time.perf_counter() - start
        return SolveReport(
            popcount(upper), VertexSet.from_bits(g.n, upper), "fortbb",
            _forts(g, search.forts), stats, complete=False, lower_bound=k,
        )
    assert closure_bits(g.masks, upper) == full
    stats.wall_time = time.perf_counter() - start
    return SolveReport(popcount(upper), VertexSet.from_bits(g.n, upper), "fortbb", _forts(g, search.forts), stats)


def _forts(g: Graph, forts: Sequence[int]) -> list[Fort]:
    return [Fort(VertexSet.from_bits(g.n, f), FortKind.EXTRACTED) for f in forts]


def solve(g: Graph, algorithm: str = "fortbb", cap: int = EXHAUSTIVE_CAP, threads: int = 1) -> SolveReport:
    if algorithm == "exhaustive":
        return solve_exhaustive(g, cap=cap, threads=threads)
    if algorithm == "fortbb":
        return solve_fortbb(g, threads=threads)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def min_zfs_enumerate(g: Graph, cap: int = ENUMERATE_CAP) -> list[VertexSet]:
    """Every minimum zero forcing set, in lexicographic order."""
    if g.n > cap:
        raise UnsupportedError(f"minimum set enumeration limited to {cap} vertices (graph has {g.n})")
    z = solve_exhaustive(g, cap=cap).z
    full = (1 << g.n) - 1
    result = []
    for combo in combinations(range(g.n), z):
        bits = sum(1 << v for v in combo)
        if closure_bits(g.masks, bits) == full:
            result.append(VertexSet.from_bits(g.n, bits))
    return result


# Path cover --------------------------------------------------------------------------

def induced_paths(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sequences of all induced paths, each listed once, from its smaller end."""
    masks = g.masks
    seen: set[int] = set()
    paths = []

    def grow(path: list[int], bits: int) -> None:
        if bits not in seen:
            seen.add(bits)
            paths.append(tuple(path) if path[0] <= path[-1] else tuple(reversed(path)))
        last = path[-1]
        for w in g.adjacency[last]:
            if bits >> w & 1:
                continue
            # w may touch only the current end of the path
            if masks[w] & bits != 1 << last:
                continue
            path.append(w)
            grow(path, bits | 1 << w)
            path.pop()

    for v in range(g.n):
        grow([v], 1 << v)
    return paths


def path_cover_number(g: Graph, cap: int = PATH_COVER_CAP) -> tuple[int, list[tuple[int, ...]]]:
    """Minimum number of vertex-disjoint induced paths covering ``V(g)``, with a witness.

    Memoised search over the uncovered set: the lowest uncovered vertex must
    lie on some path inside the uncovered set, so only those paths are tried.
    """
    if g.n > cap:
        raise UnsupportedError(f"path cover search limited to {cap} vertices (graph has {g.n})")
    if g.n == 0:
        return 0, []
    by_low: dict[int, list[tuple[int, tuple[int, ...]]]] = {}
    for path in induced_paths(g):
        bits = sum(1 << v for v in path)
        by_low.setdefault(min(path), []).append((bits, path))
    for options in by_low.values():
        options.sort(key=lambda item: -popcount(item[0]))
    memo: dict[int, tuple[int, int, tuple[int, ...]] | None] = {0: None}
    cost: dict[int, int] = {0: 0}

    def best(rest: int) -> int:
        if rest in cost:
            return cost[rest]
        low = (rest & -rest).bit_length() - 1
        value = None
        for bits, path in by_low.get(low, ()):
            if bits & rest == bits:
                sub = 1 + best(rest & ~bits)
                if value is None or sub < value:
                    value = sub
                    memo[rest] = (bits, rest & ~bits, path)
        cost[rest] = value
        return value

    full = (1 << g.n) - 1
    p = best(full)
    cover = []
    rest = full
    while rest:
        _, rest, path = memo[rest]
        cover.append(path)
    return p, cover

"""Immutable simple graphs, semantic vertex labels and dense vertex sets.

Vertices are the integers ``0..n-1``. Labels live in a parallel tuple and are
never used as storage keys; every kernel works on ids and on integer bitmasks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, UnsupportedError

ISOMORPHISM_CUTOFF = 12


@dataclass(frozen=True, order=True)
class VertexLabel:
    """Semantic role of a vertex inside a generated graph.

    ``kind`` is one of ``center``, ``hub``, ``spoke``, ``pendant``, ``grid`` or
    ``plain``; ``index`` holds the 1-based indices of the role (``plain`` keeps
    the 0-based position instead).
    """

    kind: str
    index: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "center":
            return "c"
        if self.kind == "hub":
            return f"u{self.index[0]}"
        if self.kind == "pendant":
            return f"p{self.index[0]}"
        if self.kind in ("spoke", "grid"):
            return "v" + "_".join(str(i) for i in self.index)
        return str(self.index[0])

    @classmethod
    def parse(cls, text: str) -> VertexLabel:
        text = text.strip()
        if text == "c":
            return Center()
        m = re.fullmatch(r"([up])(\d+)", text)
        if m:
            return cls("hub" if m.group(1) == "u" else "pendant", (int(m.group(2)),))
        m = re.fullmatch(r"v(\d+)_(\d+)(?:_(\d+))?", text)
        if m:
            if m.group(3) is None:
                return Grid(int(m.group(1)), int(m.group(2)))
            return Spoke(int(m.group(1)), int(m.group(2)), int(m.group(3)))
        if text.isdigit():
            return Plain(int(text))
        raise DomainError(f"unrecognised vertex label {text!r}")


def Center() -> VertexLabel:
    return VertexLabel("center")


def Hub(i: int) -> VertexLabel:
    return VertexLabel("hub", (i,))


def Spoke(i: int, j: int, k: int) -> VertexLabel:
    return VertexLabel("spoke", (i, j, k))


def Pendant(i: int) -> VertexLabel:
    return VertexLabel("pendant", (i,))


def Grid(i: int, j: int) -> VertexLabel:
    return VertexLabel("grid", (i, j))


def Plain(index: int) -> VertexLabel:
    return VertexLabel("plain", (index,))


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class VertexSet:
    """A set of vertex ids of a graph with ``n`` vertices, stored as a bitmask.

    Instances are immutable and hashable. Binary operations require both
    operands to share the same ambient size.
    """

    __slots__ = ("_n", "_bits")

    def __init__(self, n: int, members: Iterable[int] = ()) -> None:
        bits = 0
        for v in members:
            if not 0 <= v < n:
                raise DomainError(f"vertex {v} outside 0..{n - 1}")
            bits |= 1 << v
        self._n = n
        self._bits = bits

    @classmethod
    def from_bits(cls, n: int, bits: int) -> VertexSet:
        if bits < 0 or bits >> n:
            raise DomainError(f"bitmask has members outside 0..{n - 1}")
        vs = cls.__new__(cls)
        vs._n = n
        vs._bits = bits
        return vs

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls.from_bits(n, (1 << n) - 1)

    @property
    def n(self) -> int:
        return self._n

    @property
    def bits(self) -> int:
        return self._bits

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self._n and bool(self._bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self._bits)

    def __len__(self) -> int:
        return popcount(self._bits)

    def __bool__(self) -> bool:
        return self._bits != 0

    def _check(self, other: VertexSet) -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other._n != self._n:
            raise DomainError(f"ambient size mismatch: {self._n} vs {other._n}")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet.from_bits(self._n, self._bits | other._bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet.from_bits(self._n, self._bits & other._bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet.from_bits(self._n, self._bits & ~other._bits)

    def complement(self) -> VertexSet:
        return VertexSet.from_bits(self._n, ~self._bits & ((1 << self._n) - 1))

    def issubset(self, other: VertexSet) -> bool:
        self._check(other)
        return self._bits & ~other._bits == 0

    def isdisjoint(self, other: VertexSet) -> bool:
        self._check(other)
        return self._bits & other._bits == 0

    def __le__(self, other: VertexSet) -> bool:
        return self.issubset(other)

    def __ge__(self, other: VertexSet) -> bool:
        return other.issubset(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self._n == other._n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._n, self._bits))

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet(n={self._n}, {self.to_list()})"


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    The constructor normalises the edge list, rejects loops and out-of-range
    endpoints, and ignores duplicate edges in either orientation.
    """

    __slots__ = ("_n", "_adj", "_masks", "_labels", "_edges", "name")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[VertexLabel] | None = None,
        name: str = "",
    ) -> None:
        if n < 0:
            raise DomainError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise DomainError(f"{len(labels)} labels for {n} vertices")
            if len(set(labels)) != n:
                raise DomainError("vertex labels are not unique")
        self._n = n
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._masks = tuple(sum(1 << w for w in s) for s in nbrs)
        self._labels = labels
        self._edges = tuple((u, v) for u in range(n) for v in self._adj[u] if u < v)
        self.name = name

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as an integer bitmask."""
        return self._masks

    @property
    def labels(self) -> tuple[VertexLabel, ...] | None:
        return self._labels

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._masks[u] >> v & 1)

    def label(self, v: int) -> VertexLabel:
        self._check_vertex(v)
        return self._labels[v] if self._labels is not None else Plain(v)

    def vertex_of(self, label: VertexLabel | str) -> int:
        """Id of the vertex carrying ``label``."""
        if isinstance(label, str):
            label = VertexLabel.parse(label)
        if self._labels is not None:
            try:
                return self._labels.index(label)
            except ValueError:
                pass
        elif label.kind == "plain" and 0 <= label.index[0] < self._n:
            return label.index[0]
        raise DomainError(f"no vertex labelled {label}")

    def vertex_set(self, members: Iterable[int] = ()) -> VertexSet:
        return VertexSet(self._n, members)

    def all_vertices(self) -> VertexSet:
        return VertexSet.full(self._n)

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise DomainError(f"vertex {v!r} outside 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges and self._labels == other._labels

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        name = f" {self.name!r}" if self.name else ""
        return f"<Graph{name} n={self._n} m={len(self._edges)}>"


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def neighbors_in(g: Graph, v: int, s: VertexSet) -> int:
    """Number of neighbors of ``v`` that belong to ``s``."""
    g._check_vertex(v)
    _check_ambient(g, s)
    return popcount(g.masks[v] & s.bits)


def _check_ambient(g: Graph, s: VertexSet) -> None:
    if s.n != g.n:
        raise DomainError(f"vertex set over {s.n} vertices used with a graph on {g.n}")


def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s`` with vertices renumbered in increasing old-id order.

    Returns the new graph and the map from old ids to new ids.
    """
    _check_ambient(g, s)
    members = s.to_list()
    mapping = {old: new for new, old in enumerate(members)}
    edges = [(mapping[u], mapping[v]) for u, v in g.edges if u in mapping and v in mapping]
    labels = [g.labels[v] for v in members] if g.labels is not None else None
    return Graph(len(members), edges, labels, name=f"{g.name}[induced]" if g.name else ""), mapping


def is_isomorphic_small(g1: Graph, g2: Graph, cutoff: int = ISOMORPHISM_CUTOFF) -> bool:
    """Exact isomorphism test by backtracking, for graphs of at most ``cutoff`` vertices."""
    if max(g1.n, g2.n) > cutoff:
        raise UnsupportedError(f"isomorphism test limited to {cutoff} vertices")
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    deg1 = [len(a) for a in g1.adjacency]
    deg2 = [len(a) for a in g2.adjacency]
    if sorted(deg1) != sorted(deg2):
        return False
    # Most constrained first: high degree vertices fix more edges early.
    order = sorted(range(g1.n), key=lambda v: -deg1[v])
    image = [-1] * g1.n
    used = [False] * g2.n

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in range(g2.n):
            if used[w] or deg2[w] != deg1[v]:
                continue
            if all(g1.has_edge(v, u) == g2.has_edge(w, image[u]) for u in order[:pos]):
                image[v] = w
                used[w] = True
                if extend(pos + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    return extend(0)

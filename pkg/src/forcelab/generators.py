"""Constructors for peony graphs, web graphs, prisms, paths and cycles.

Vertex order is canonical so ids are stable across runs:

* peony ``Py(m, r, s)``: ``c``, ``u_1..u_m``, then ``v_{i,j,k}`` in
  lexicographic ``(i, j, k)`` order;
* web ``Wb(m, r)`` and the prism ``C_m x P_r``: ``v_{i,j}`` in lexicographic
  ``(i, j)`` order, followed by the pendants ``p_1..p_m`` (web only).

All family indices are 1-based and hub/column arithmetic wraps modulo ``m``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainError, ParameterError
from .graph import Center, Graph, Grid, Hub, Pendant, Plain, Spoke, VertexSet


@dataclass(frozen=True)
class PeonyParams:
    m: int
    r: int
    s: int

    def validate(self) -> None:
        if self.m < 3:
            raise ParameterError(f"peony requires m >= 3 (got m={self.m})")
        if self.r < 2:
            raise ParameterError(f"peony requires r >= 2 (got r={self.r})")
        if self.s < 1:
            raise ParameterError(f"peony requires s >= 1 (got s={self.s})")

    @property
    def num_vertices(self) -> int:
        return 1 + self.m + self.m * self.r * self.s


@dataclass(frozen=True)
class WebParams:
    m: int
    r: int

    def validate(self) -> None:
        if self.m < 3:
            raise ParameterError(f"web requires m >= 3 (got m={self.m})")
        if self.r < 1:
            raise ParameterError(f"web requires r >= 1 (got r={self.r})")

    @property
    def num_vertices(self) -> int:
        return self.m * self.r + self.m


def wrap(i: int, m: int) -> int:
    """Map any integer index onto ``1..m`` modulo ``m``."""
    return (i - 1) % m + 1


# Peony ids ------------------------------------------------------------------

def peony_center(p: PeonyParams) -> int:
    return 0


def peony_hub(p: PeonyParams, i: int) -> int:
    return wrap(i, p.m)


def peony_spoke(p: PeonyParams, i: int, j: int, k: int) -> int:
    i = wrap(i, p.m)
    if not (1 <= j <= p.r and 1 <= k <= p.s):
        raise DomainError(f"spoke index ({i}, {j}, {k}) outside Py({p.m},{p.r},{p.s})")
    return 1 + p.m + ((i - 1) * p.r + (j - 1)) * p.s + (k - 1)


def make_peony(p: PeonyParams) -> Graph:
    p.validate()
    m, r, s = p.m, p.r, p.s
    labels = [Center()] + [Hub(i) for i in range(1, m + 1)]
    labels += [Spoke(i, j, k) for i in range(1, m + 1) for j in range(1, r + 1) for k in range(1, s + 1)]
    c = peony_center(p)
    edges = []
    for i in range(1, m + 1):
        u = peony_hub(p, i)
        edges.append((c, u))
        for j in range(1, r + 1):
            edges.append((u, peony_spoke(p, i, j, 1)))
            edges.append((u, peony_spoke(p, i - 1, j, s)))
            for k in range(1, s):
                edges.append((peony_spoke(p, i, j, k), peony_spoke(p, i, j, k + 1)))
    return Graph(p.num_vertices, edges, labels, name=f"Py({m},{r},{s})")


def _check_station(p: PeonyParams, i: int) -> None:
    if not 1 <= i <= p.m:
        raise DomainError(f"station index {i} outside 1..{p.m}")


def layer(p: PeonyParams, i: int, j: int) -> VertexSet:
    """The path ``v_{i,j,1..s}`` joining ``u_i`` to ``u_{i+1}``."""
    p.validate()
    _check_station(p, i)
    if not 1 <= j <= p.r:
        raise DomainError(f"layer index {j} outside 1..{p.r}")
    return VertexSet(p.num_vertices, (peony_spoke(p, i, j, k) for k in range(1, p.s + 1)))


def station(p: PeonyParams, i: int) -> VertexSet:
    """Hub ``u_i`` together with its ``r`` outgoing layers."""
    p.validate()
    _check_station(p, i)
    members = [peony_hub(p, i)]
    members += [peony_spoke(p, i, j, k) for j in range(1, p.r + 1) for k in range(1, p.s + 1)]
    return VertexSet(p.num_vertices, members)


# Web / prism ids -------------------------------------------------------------

def grid_vertex(m: int, r: int, i: int, j: int) -> int:
    i = wrap(i, m)
    if not 1 <= j <= r:
        raise DomainError(f"grid row {j} outside 1..{r}")
    return (i - 1) * r + (j - 1)


def web_grid(p: WebParams, i: int, j: int) -> int:
    return grid_vertex(p.m, p.r, i, j)


def web_pendant(p: WebParams, i: int) -> int:
    return p.m * p.r + wrap(i, p.m) - 1


def _grid_edges(m: int, r: int) -> list[tuple[int, int]]:
    edges = []
    for i in range(1, m + 1):
        for j in range(1, r + 1):
            if j < r:
                edges.append((grid_vertex(m, r, i, j), grid_vertex(m, r, i, j + 1)))
            edges.append((grid_vertex(m, r, i, j), grid_vertex(m, r, i + 1, j)))
    return edges


def make_cycle_path_product(m: int, r: int) -> Graph:
    """The prism ``C_m x P_r``; vertex ``(i, j)`` is column ``i`` of the cycle, row ``j`` of the path."""
    if m < 3:
        raise ParameterError(f"prism requires m >= 3 (got m={m})")
    if r < 1:
        raise ParameterError(f"prism requires r >= 1 (got r={r})")
    labels = [Grid(i, j) for i in range(1, m + 1) for j in range(1, r + 1)]
    return Graph(m * r, _grid_edges(m, r), labels, name=f"C{m}xP{r}")


def make_web(p: WebParams) -> Graph:
    p.validate()
    m, r = p.m, p.r
    labels = [Grid(i, j) for i in range(1, m + 1) for j in range(1, r + 1)]
    labels += [Pendant(i) for i in range(1, m + 1)]
    edges = _grid_edges(m, r)
    edges += [(web_pendant(p, i), web_grid(p, i, 1)) for i in range(1, m + 1)]
    return Graph(p.num_vertices, edges, labels, name=f"Wb({m},{r})")


def web_grid_vertices(p: WebParams) -> VertexSet:
    return VertexSet(p.num_vertices, range(p.m * p.r))


def web_columns(p: WebParams, columns, pendants: bool = True) -> VertexSet:
    """Grid vertices (and optionally pendants) of the given 1-based columns."""
    members = []
    for i in columns:
        members += [web_grid(p, i, j) for j in range(1, p.r + 1)]
        if pendants:
            members.append(web_pendant(p, i))
    return VertexSet(p.num_vertices, members)


# Small classics --------------------------------------------------------------

def make_path(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"path requires n >= 1 (got n={n})")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], [Plain(i) for i in range(n)], name=f"P{n}")


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle requires n >= 3 (got n={n})")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], [Plain(i) for i in range(n)], name=f"C{n}")


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"complete graph requires n >= 1 (got n={n})")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)], name=f"K{n}")


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi ``G(n, p)``. Test utility only."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges, name=f"G({n},{p:g})")

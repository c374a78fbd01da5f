"""Forts: nonempty vertex sets that no outside vertex can force into.

A set ``S`` is a fort when every vertex outside ``S`` has zero or at least two
neighbors in ``S``. A set is zero forcing exactly when it meets every fort,
which is what makes forts usable both as stall certificates and as lower
bound witnesses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from .errors import DomainError, PreconditionError, UnsupportedError
from .forcing import closure_bits
from .generators import PeonyParams, layer, peony_center, peony_spoke
from .graph import Graph, VertexSet, iter_bits

ENUMERATION_CAP = 20


class FortKind(enum.Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"
    TYPE3 = "type3"
    TYPE4 = "type4"
    EXTRACTED = "extracted"
    ENUMERATED = "enumerated"


@dataclass(frozen=True)
class Fort:
    vertices: VertexSet
    kind: FortKind = FortKind.ENUMERATED
    params: dict = field(default_factory=dict, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def to_list(self) -> list[int]:
        return self.vertices.to_list()


def is_fort_bits(masks: Sequence[int], n: int, s: int) -> bool:
    outside = ((1 << n) - 1) & ~s
    for u in iter_bits(outside):
        hit = masks[u] & s
        if hit and not hit & (hit - 1):
            return False
    return True


def is_fort(g: Graph, s: VertexSet) -> bool:
    if s.n != g.n:
        raise DomainError(f"vertex set over {s.n} vertices used with a graph on {g.n}")
    if not s:
        raise DomainError("the empty set is not accepted as a fort")
    return is_fort_bits(g.masks, g.n, s.bits)


# Peony fort families -----------------------------------------------------------

def _peony_fort(p: PeonyParams, bits: int, kind: FortKind, params: dict) -> Fort:
    return Fort(VertexSet.from_bits(p.num_vertices, bits), kind, params)


def fort_type1(p: PeonyParams, i: int, j1: int, j2: int) -> Fort:
    """Two distinct layers of station ``i``."""
    if j1 == j2:
        raise DomainError("type-1 forts need two distinct layers")
    bits = layer(p, i, j1).bits | layer(p, i, j2).bits
    return _peony_fort(p, bits, FortKind.TYPE1, {"i": i, "j1": j1, "j2": j2})


def fort_type2(p: PeonyParams, j_choice: Sequence[int]) -> Fort:
    """One layer ``j_choice[i-1]`` from every station ``i``."""
    if len(j_choice) != p.m:
        raise DomainError(f"type-2 forts need {p.m} layer choices, got {len(j_choice)}")
    bits = 0
    for i, j in enumerate(j_choice, start=1):
        bits |= layer(p, i, j).bits
    return _peony_fort(p, bits, FortKind.TYPE2, {"j": list(j_choice)})


def fort_type3(p: PeonyParams, i0: int, j_choice: Sequence[int]) -> Fort:
    """The center plus one layer from every station except ``i0``.

    ``j_choice`` lists the layers of stations ``1..m`` with ``i0`` skipped.
    """
    if not 1 <= i0 <= p.m:
        raise DomainError(f"station index {i0} outside 1..{p.m}")
    if len(j_choice) != p.m - 1:
        raise DomainError(f"type-3 forts need {p.m - 1} layer choices, got {len(j_choice)}")
    stations = [i for i in range(1, p.m + 1) if i != i0]
    bits = 1 << peony_center(p)
    for i, j in zip(stations, j_choice):
        bits |= layer(p, i, j).bits
    return _peony_fort(p, bits, FortKind.TYPE3, {"i0": i0, "j": list(j_choice)})


def fort_type4(p: PeonyParams, k_choice: Sequence[Sequence[int]]) -> Fort:
    """Everything except the center and one chosen vertex ``v_{i,j,k_choice[i-1][j-1]}`` per layer."""
    p.validate()
    if len(k_choice) != p.m or any(len(row) != p.r for row in k_choice):
        raise DomainError(f"type-4 forts need an {p.m} x {p.r} table of positions")
    removed = 1 << peony_center(p)
    for i, row in enumerate(k_choice, start=1):
        for j, k in enumerate(row, start=1):
            if not 1 <= k <= p.s:
                raise DomainError(f"position {k} outside 1..{p.s}")
            removed |= 1 << peony_spoke(p, i, j, k)
    full = (1 << p.num_vertices) - 1
    return _peony_fort(p, full & ~removed, FortKind.TYPE4, {"k": [list(row) for row in k_choice]})


def type2_choices(p: PeonyParams):
    return product(range(1, p.r + 1), repeat=p.m)


def type3_choices(p: PeonyParams):
    for i0 in range(1, p.m + 1):
        for choice in product(range(1, p.r + 1), repeat=p.m - 1):
            yield i0, choice


def type4_choices(p: PeonyParams):
    for flat in product(range(1, p.s + 1), repeat=p.m * p.r):
        yield [list(flat[i * p.r:(i + 1) * p.r]) for i in range(p.m)]


# Extraction, minimisation, enumeration ---------------------------------------------

def extract_fort_from_failure(g: Graph, b: VertexSet) -> Fort:
    """The white vertices left when forcing from ``b`` stalls.

    Every blue vertex at the stall has zero or at least two white neighbors,
    so the white set is a fort; it is disjoint from ``b`` by construction.
    """
    if b.n != g.n:
        raise DomainError(f"vertex set over {b.n} vertices used with a graph on {g.n}")
    full = (1 << g.n) - 1
    white = full & ~closure_bits(g.masks, b.bits)
    if not white:
        raise PreconditionError("the set is zero forcing; nothing to extract")
    return Fort(VertexSet.from_bits(g.n, white), FortKind.EXTRACTED)


def minimize_fort_bits(masks: Sequence[int], n: int, fort: int) -> int:
    """Shrink a fort to an inclusion-minimal fort inside it.

    For ``v`` in the fort, the white set left by forcing from the outside plus
    ``v`` is the largest fort avoiding ``v``; adopt it whenever nonempty.
    """
    full = (1 << n) - 1
    for v in list(iter_bits(fort)):
        if not fort >> v & 1:
            continue
        smaller = full & ~closure_bits(masks, (full & ~fort) | 1 << v)
        if smaller:
            fort = smaller
    return fort


def minimize_fort(g: Graph, fort: Fort) -> Fort:
    bits = minimize_fort_bits(g.masks, g.n, fort.vertices.bits)
    return Fort(VertexSet.from_bits(g.n, bits), fort.kind, dict(fort.params))


def enumerate_minimal_forts(g: Graph, max_size: int | None = None, cap: int = ENUMERATION_CAP) -> list[Fort]:
    """All inclusion-minimal forts with at most ``max_size`` vertices.

    Supports are scanned by increasing size in lexicographic order; a support
    containing an already-found fort cannot be minimal and is skipped, so the
    output is exactly the minimal forts, ordered by (size, lex).
    """
    if g.n > cap:
        raise UnsupportedError(f"fort enumeration limited to {cap} vertices (graph has {g.n})")
    max_size = g.n if max_size is None else min(max_size, g.n)
    masks = g.masks
    found: list[int] = []
    for size in range(1, max_size + 1):
        for combo in combinations(range(g.n), size):
            s = 0
            for v in combo:
                s |= 1 << v
            if any(f & s == f for f in found):
                continue
            if is_fort_bits(masks, g.n, s):
                found.append(s)
    return [Fort(VertexSet.from_bits(g.n, f), FortKind.ENUMERATED) for f in found]


def enumerate_forts(g: Graph, max_size: int | None = None, cap: int = ENUMERATION_CAP) -> list[Fort]:
    """Every fort with at most ``max_size`` vertices, ordered by (size, lex)."""
    if g.n > cap:
        raise UnsupportedError(f"fort enumeration limited to {cap} vertices (graph has {g.n})")
    max_size = g.n if max_size is None else min(max_size, g.n)
    out = []
    for size in range(1, max_size + 1):
        for combo in combinations(range(g.n), size):
            s = sum(1 << v for v in combo)
            if is_fort_bits(g.masks, g.n, s):
                out.append(Fort(VertexSet.from_bits(g.n, s), FortKind.ENUMERATED))
    return out


def hits_all(b: VertexSet, forts: Sequence[Fort]) -> bool:
    return all(b.bits & f.vertices.bits for f in forts)


def verify_duality(
    g: Graph, b: VertexSet, forts: Sequence[Fort] | None = None, cap: int = ENUMERATION_CAP
) -> bool:
    """Whether "``b`` is zero forcing" agrees with "``b`` meets every minimal fort".

    Pass ``forts`` to reuse a precomputed minimal fort list across many sets.
    """
    if g.n > cap:
        raise UnsupportedError(f"duality check limited to {cap} vertices (graph has {g.n})")
    if forts is None:
        forts = enumerate_minimal_forts(g, cap=cap)
    zfs = closure_bits(g.masks, b.bits) == (1 << g.n) - 1
    return zfs == hits_all(b, forts)


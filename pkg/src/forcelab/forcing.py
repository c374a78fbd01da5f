"""The zero forcing process.

A blue vertex whose neighborhood contains exactly one white vertex forces that
vertex blue. ``closure`` computes the final blue set; ``run_chronology`` records
*when* each force happened so chains, termini and restrictions can be derived
and checked.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Iterable

from .errors import DomainError, PreconditionError
from .graph import Graph, VertexSet, induced_subgraph, iter_bits

Force = tuple[int, int]


class ForcePolicy(enum.Enum):
    """How the forces of one time-step are chosen.

    ``MAX_CONCURRENT`` performs every valid force at once (one per white
    target, lowest-id forcer wins). ``ALL_EAGER`` performs a single force per
    time-step: the lowest-id white vertex that can be forced, by its lowest-id
    forcer. ``RANDOM`` picks a random nonempty subset of the forceable targets
    and a random forcer for each; it needs an ``rng``.
    """

    ALL_EAGER = "all-eager"
    MAX_CONCURRENT = "max-concurrent"
    RANDOM = "random"


def _check(g: Graph, s: VertexSet) -> None:
    if s.n != g.n:
        raise DomainError(f"vertex set over {s.n} vertices used with a graph on {g.n}")


def closure_bits(masks: tuple[int, ...], blue: int) -> int:
    """Closure kernel on raw bitmasks.

    Worklist of blue vertices that may have become able to force. A vertex is
    re-examined only when one of its neighbors turns blue.
    """
    work = list(iter_bits(blue))
    while work:
        u = work.pop()
        white = masks[u] & ~blue
        if white and not white & (white - 1):
            blue |= white
            v = white.bit_length() - 1
            work.append(v)
            work.extend(iter_bits(masks[v] & blue))
    return blue


def closure(g: Graph, blue: VertexSet) -> VertexSet:
    """Least superset of ``blue`` closed under the color change rule."""
    _check(g, blue)
    return VertexSet.from_bits(g.n, closure_bits(g.masks, blue.bits))


def is_zero_forcing_set(g: Graph, b: VertexSet) -> bool:
    _check(g, b)
    return closure_bits(g.masks, b.bits) == (1 << g.n) - 1


def available_forces(g: Graph, blue: int) -> list[Force]:
    """All valid forces ``u -> v`` when ``blue`` is the current blue bitmask."""
    forces = []
    for u in iter_bits(blue):
        white = g.masks[u] & ~blue
        if white and not white & (white - 1):
            forces.append((u, white.bit_length() - 1))
    return forces


@dataclass(frozen=True)
class Chronology:
    """A relaxed chronology of forces.

    ``steps[k-1]`` is the set of forces performed at time-step ``k``; each step
    is stored as a tuple of ``(forcer, target)`` pairs sorted by target.
    """

    initial: VertexSet
    steps: tuple[tuple[Force, ...], ...]
    graph_size: int

    def forces(self) -> Iterable[Force]:
        for step in self.steps:
            yield from step

    def expansion(self, k: int) -> VertexSet:
        """Blue set after time-step ``k`` (``k = 0`` is the initial set)."""
        if not 0 <= k <= len(self.steps):
            raise DomainError(f"time-step {k} outside 0..{len(self.steps)}")
        bits = self.initial.bits
        for step in self.steps[:k]:
            for _, v in step:
                bits |= 1 << v
        return VertexSet.from_bits(self.graph_size, bits)

    def expansion_sequence(self) -> list[VertexSet]:
        seq = [self.initial]
        bits = self.initial.bits
        for step in self.steps:
            for _, v in step:
                bits |= 1 << v
            seq.append(VertexSet.from_bits(self.graph_size, bits))
        return seq

    def final(self) -> VertexSet:
        return self.expansion(len(self.steps))

    def to_json(self) -> dict:
        return {
            "initial": self.initial.to_list(),
            "steps": [[{"from": u, "to": v} for u, v in step] for step in self.steps],
        }

    @classmethod
    def from_json(cls, data: dict, n: int) -> Chronology:
        steps = tuple(
            tuple((int(f["from"]), int(f["to"])) for f in step) for step in data["steps"]
        )
        return cls(VertexSet(n, data["initial"]), steps, n)


def run_chronology(
    g: Graph,
    blue: VertexSet,
    policy: ForcePolicy = ForcePolicy.ALL_EAGER,
    rng: random.Random | None = None,
) -> Chronology:
    """Run the process from ``blue`` until it stalls, recording every force."""
    _check(g, blue)
    if policy is ForcePolicy.RANDOM and rng is None:
        raise DomainError("the random policy needs an rng")
    current = blue.bits
    steps: list[tuple[Force, ...]] = []
    while True:
        forces = available_forces(g, current)
        if not forces:
            break
        # forcers arrive in increasing id order, so index 0 is the lowest
        by_target: dict[int, list[int]] = {}
        for u, v in forces:
            by_target.setdefault(v, []).append(u)
        targets = sorted(by_target)
        if policy is ForcePolicy.MAX_CONCURRENT:
            step = [(by_target[v][0], v) for v in targets]
        elif policy is ForcePolicy.ALL_EAGER:
            v = targets[0]
            step = [(by_target[v][0], v)]
        else:
            chosen = [v for v in targets if rng.random() < 0.5] or [rng.choice(targets)]
            step = [(rng.choice(by_target[v]), v) for v in chosen]
        for _, v in step:
            current |= 1 << v
        steps.append(tuple(step))
    return Chronology(blue, tuple(steps), g.n)


@dataclass
class ValidationResult:
    ok: bool
    step: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_chronology(g: Graph, c: Chronology, require_complete: bool = False) -> ValidationResult:
    """Check that every force is legal at its time-step and no vertex is forced twice.

    Empty time-steps are allowed (restrictions produce them). With
    ``require_complete`` the final expansion must also be all of ``V(g)``.
    On failure the earliest offending time-step is reported.
    """
    if c.graph_size != g.n or c.initial.n != g.n:
        return ValidationResult(False, 0, f"chronology over {c.graph_size} vertices, graph has {g.n}")
    blue = c.initial.bits
    for k, step in enumerate(c.steps, start=1):
        targets = 0
        for u, v in step:
            if not (0 <= u < g.n and 0 <= v < g.n):
                return ValidationResult(False, k, f"force {u}->{v} names a vertex outside the graph")
            if not blue >> u & 1:
                return ValidationResult(False, k, f"forcer {u} is white before time-step {k}")
            if blue >> v & 1 or targets >> v & 1:
                return ValidationResult(False, k, f"vertex {v} is forced more than once")
            if not g.masks[u] >> v & 1:
                return ValidationResult(False, k, f"{u} and {v} are not adjacent")
            if g.masks[u] & ~blue != 1 << v:
                return ValidationResult(False, k, f"{v} is not the unique white neighbor of {u}")
            targets |= 1 << v
        blue |= targets
    if require_complete and blue != (1 << g.n) - 1:
        return ValidationResult(False, len(c.steps), "chronology does not color every vertex")
    return ValidationResult(True)


def _require_valid(g: Graph | None, c: Chronology) -> None:
    if g is not None:
        result = validate_chronology(g, c)
        if not result:
            raise DomainError(f"invalid chronology at time-step {result.step}: {result.message}")
        return
    seen = c.initial.bits
    for u, v in c.forces():
        if seen >> v & 1 or not seen >> u & 1:
            raise DomainError(f"invalid chronology: force {u}->{v}")
        seen |= 1 << v


def chain_set(c: Chronology, g: Graph | None = None) -> list[list[int]]:
    """Forcing chains, one per initial vertex, in increasing order of their start.

    When ``g`` is given the chronology is fully validated against it first;
    otherwise only its internal consistency is checked.
    """
    _require_valid(g, c)
    successor = {u: v for u, v in c.forces()}
    chains = []
    for start in c.initial:
        chain = [start]
        while chain[-1] in successor:
            chain.append(successor[chain[-1]])
        chains.append(chain)
    return chains


def terminus(c: Chronology, g: Graph | None = None) -> VertexSet:
    """Vertices blue at the end of ``c`` that never perform a force."""
    _require_valid(g, c)
    forcers = 0
    for u, _ in c.forces():
        forcers |= 1 << u
    return VertexSet.from_bits(c.graph_size, c.final().bits & ~forcers)


@dataclass
class Restriction:
    """A chronology restricted to an induced subgraph ``H``, expressed in ``H``'s ids."""

    subgraph: Graph
    mapping: dict[int, int]
    chronology: Chronology
    initial: VertexSet
    parent_n: int
    inverse: dict[int, int] = field(init=False)

    def __post_init__(self) -> None:
        self.inverse = {new: old for old, new in self.mapping.items()}

    def lift(self, s: VertexSet) -> VertexSet:
        """Map a set of ``H`` ids back to ids of the parent graph."""
        return VertexSet(self.parent_n, (self.inverse[v] for v in s))


def restrict_chronology(g: Graph, h_vertices: VertexSet, c: Chronology, full: bool = True) -> Restriction:
    """Restrict ``c`` to the subgraph induced by ``h_vertices``.

    Keeps exactly the forces with both endpoints in ``H``. The initial set is
    ``B`` intersected with ``H`` plus every ``H`` vertex forced from outside.
    With ``full`` (the default) ``c`` must color all of ``g``; otherwise ``H``
    must lie inside the final expansion of ``c``.
    """
    _check(g, h_vertices)
    result = validate_chronology(g, c)
    if not result:
        raise PreconditionError(f"not a valid chronology: {result.message}")
    final = c.final()
    if full and final.bits != (1 << g.n) - 1:
        raise PreconditionError("chronology does not force the whole graph")
    if not h_vertices.issubset(final):
        raise PreconditionError("H contains vertices never colored by the chronology")
    sub, mapping = induced_subgraph(g, h_vertices)
    h = h_vertices.bits
    initial = c.initial.bits & h
    steps = []
    for step in c.steps:
        kept = []
        for u, v in step:
            if not h >> v & 1:
                continue
            if h >> u & 1:
                kept.append((mapping[u], mapping[v]))
            else:
                initial |= 1 << v
        steps.append(tuple(kept))
    new_initial = VertexSet(sub.n, (mapping[v] for v in iter_bits(initial)))
    return Restriction(sub, mapping, Chronology(new_initial, tuple(steps), sub.n), new_initial, g.n)

"""Explicit zero forcing sets for peony and web graphs, executed and checked.

Every construction is run through the forcing engine under the
``MAX_CONCURRENT`` policy. Time-step claims are checked as containments
``E^[k] ⊇ X``; the maximal policy has the largest expansion at every step, so
a containment that holds for any chronology holds for it too.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError, PreconditionError
from .forcing import (
    Chronology,
    ForcePolicy,
    closure,
    is_zero_forcing_set,
    restrict_chronology,
    run_chronology,
    terminus,
    validate_chronology,
)
from .forts import (
    Fort,
    extract_fort_from_failure,
    fort_type2,
    fort_type3,
    fort_type4,
    is_fort,
)
from .generators import (
    PeonyParams,
    WebParams,
    make_peony,
    make_web,
    peony_center,
    peony_hub,
    peony_spoke,
    station,
    web_columns,
    web_grid,
    web_pendant,
)
from .graph import Graph, VertexSet, induced_subgraph


class Family(enum.Enum):
    PEONY_EQUALITY = "peony-equality"
    WEB_SMALL_M = "web-small-m"
    WEB_MID_M = "web-mid-m"
    WEB_LARGE_M = "web-large-m"


@dataclass
class StepAssertion:
    """``expansion(step) ⊇ contained``, or a free-form check when ``step`` is None."""

    label: str
    step: int | None
    contained: VertexSet | None
    passed: bool

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "step": self.step,
            "contained": None if self.contained is None else self.contained.to_list(),
            "passed": self.passed,
        }


@dataclass
class ConstructionReport:
    family: Family
    params: PeonyParams | WebParams
    set: VertexSet
    expected_size: int
    forces: bool
    chronology: Chronology
    step_assertions: list[StepAssertion] = field(default_factory=list)

    @property
    def size_ok(self) -> bool:
        return len(self.set) == self.expected_size

    @property
    def ok(self) -> bool:
        return self.forces and self.size_ok and all(a.passed for a in self.step_assertions)

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "params": vars(self.params),
            "set": self.set.to_list(),
            "size": len(self.set),
            "expected_size": self.expected_size,
            "forces": self.forces,
            "steps": len(self.chronology.steps),
            "step_assertions": [a.to_json() for a in self.step_assertions],
            "ok": self.ok,
        }


def _contains(c: Chronology, step: int, label: str, target: VertexSet) -> StepAssertion:
    k = min(step, len(c.steps))
    return StepAssertion(label, step, target, target.issubset(c.expansion(k)))


# Peony ------------------------------------------------------------------------------------

def peony_construction_set(p: PeonyParams) -> VertexSet:
    """``c``, ``u_1``, every layer end ``v_{m,j,s}`` and ``v_{i,j,1}`` for ``i < m``, ``j >= 2``."""
    p.validate()
    m, r, s = p.m, p.r, p.s
    members = [peony_center(p), peony_hub(p, 1)]
    members += [peony_spoke(p, i, j, 1) for i in range(1, m) for j in range(2, r + 1)]
    members += [peony_spoke(p, m, j, s) for j in range(1, r + 1)]
    return VertexSet(p.num_vertices, members)


def peony_construction(p: PeonyParams, g: Graph | None = None) -> ConstructionReport:
    g = g or make_peony(p)
    b = peony_construction_set(p)
    chron = run_chronology(g, b, ForcePolicy.MAX_CONCURRENT)
    report = ConstructionReport(
        Family.PEONY_EQUALITY, p, b, p.m * (p.r - 1) + 3, is_zero_forcing_set(g, b), chron
    )
    report.step_assertions.append(_contains(chron, p.s, "station 1 blue", station(p, 1)))
    report.step_assertions.append(
        _contains(chron, p.s + 1, "stations 1 and m blue", station(p, 1) | station(p, p.m))
    )
    return report


# Web -------------------------------------------------------------------------------------

def ceil_half(m: int) -> int:
    return -(-m // 2)


def web_regime(m: int, r: int) -> Family:
    if m <= 2 * r:
        return Family.WEB_SMALL_M
    if ceil_half(m) < 2 * r:
        return Family.WEB_MID_M
    return Family.WEB_LARGE_M


def web_formula(m: int, r: int) -> int:
    return max(ceil_half(m), min(m, 2 * r))


def _require_regime(p: WebParams, family: Family) -> None:
    p.validate()
    actual = web_regime(p.m, p.r)
    if actual is not family:
        raise PreconditionError(f"Wb({p.m},{p.r}) lies in regime {actual.value}, not {family.value}")


def web_pendant_indices(p: WebParams) -> list[int]:
    """1-based pendant indices of the construction for the regime of ``p``."""
    m, r = p.m, p.r
    regime = web_regime(m, r)
    if regime is Family.WEB_SMALL_M:
        return list(range(1, m + 1))
    idx = set(range(1, 2 * r + 1))
    if regime is Family.WEB_LARGE_M:
        if m % 2 == 0:
            idx.update(2 * r + 2 * i for i in range(1, (m - 4 * r) // 2 + 1))
        else:
            # for m = 4r - 1 the extra pendant p_{m-2r} is already among the first 2r
            idx.update(2 * r + 2 * i for i in range(1, (m - 1 - 4 * r) // 2 + 1))
            idx.add(m - 2 * r)
    return sorted(idx)


def web_construction_set(p: WebParams) -> VertexSet:
    return VertexSet(p.num_vertices, (web_pendant(p, i) for i in web_pendant_indices(p)))


def web_block_chronology(p: WebParams, b: VertexSet) -> Chronology:
    """Forces coloring columns ``1..2r`` from ``p_1..p_{2r}`` in ``2r - 1`` time-steps.

    Pendants push down the middle columns first (the reach shrinks by one
    column on each side per step); the remaining corners are then filled
    sideways from the middle outwards.
    """
    r = p.r
    steps = [tuple((web_pendant(p, i), web_grid(p, i, 1)) for i in range(1, 2 * r + 1))]
    for k in range(2, r + 1):
        steps.append(tuple((web_grid(p, i, k - 1), web_grid(p, i, k)) for i in range(k, 2 * r - k + 2)))
    for k in range(r + 1, 2 * r):
        step = []
        for j in range(2 * r - k + 1, r + 1):
            step.append((web_grid(p, 2 * r - k + 1, j), web_grid(p, 2 * r - k, j)))
            step.append((web_grid(p, k, j), web_grid(p, k + 1, j)))
        steps.append(tuple(step))
    return Chronology(b, tuple(steps), p.num_vertices)


def _shift_columns(g: Graph, p: WebParams, s: VertexSet, shift: int) -> VertexSet:
    """Rotate web vertices by ``shift`` columns (an automorphism of ``Wb(m, r)``)."""
    image = []
    for v in s:
        label = g.label(v)
        if label.kind == "grid":
            image.append(web_grid(p, label.index[0] + shift, label.index[1]))
        else:
            image.append(web_pendant(p, label.index[0] + shift))
    return VertexSet(g.n, image)


def terminus_transfer(g: Graph, p: WebParams, b: VertexSet, chron: Chronology) -> list[StepAssertion]:
    """Restrict the block chronology to the first ``2r`` columns, rotate its terminus, check it.

    The rotated terminus must force the rotated block on its own and must be
    blue by the time-step the argument needs (``2r - 1`` in the middle regime,
    ``max(m - 2r, 2r)`` in the large regime).
    """
    m, r = p.m, p.r
    regime = web_regime(m, r)
    block = web_block_chronology(p, b)
    checks = [StepAssertion("block chronology valid", None, None, bool(validate_chronology(g, block)))]
    h = web_columns(p, range(1, 2 * r + 1))
    restricted = restrict_chronology(g, h, block, full=False)
    checks.append(
        StepAssertion(
            "restricted initial set forces H",
            None,
            None,
            bool(validate_chronology(restricted.subgraph, restricted.chronology, require_complete=True)),
        )
    )
    term = restricted.lift(terminus(restricted.chronology))
    if regime is Family.WEB_MID_M:
        shift, step = m - 2 * r + 1, 2 * r - 1
    else:
        shift, step = m - 2 * r, max(m - 2 * r, 2 * r)
    image = _shift_columns(g, p, term, shift)
    h_prime = _shift_columns(g, p, h, shift)
    sub, mapping = induced_subgraph(g, h_prime)
    forces_h_prime = is_zero_forcing_set(sub, sub.vertex_set(mapping[v] for v in image))
    checks.append(StepAssertion("rotated terminus forces H'", None, image, forces_h_prime))
    checks.append(_contains(chron, step, "rotated terminus blue", image))
    return checks


def _web_report(p: WebParams, family: Family, expected: int, g: Graph | None) -> ConstructionReport:
    g = g or make_web(p)
    b = web_construction_set(p)
    chron = run_chronology(g, b, ForcePolicy.MAX_CONCURRENT)
    return ConstructionReport(family, p, b, expected, is_zero_forcing_set(g, b), chron)


def web_construction_small_m(p: WebParams, g: Graph | None = None) -> ConstructionReport:
    """All ``m`` pendants; every column is colored top-down within ``r`` steps."""
    _require_regime(p, Family.WEB_SMALL_M)
    report = _web_report(p, Family.WEB_SMALL_M, p.m, g)
    report.step_assertions.append(_contains(report.chronology, p.r, "all blue", VertexSet.full(p.num_vertices)))
    return report


def web_construction_mid_m(p: WebParams, g: Graph | None = None) -> ConstructionReport:
    _require_regime(p, Family.WEB_MID_M)
    g = g or make_web(p)
    report = _web_report(p, Family.WEB_MID_M, 2 * p.r, g)
    block = web_columns(p, range(1, 2 * p.r + 1))
    report.step_assertions.append(_contains(report.chronology, 2 * p.r - 1, "first 2r columns blue", block))
    report.step_assertions += terminus_transfer(g, p, report.set, report.chronology)
    return report


def web_construction_large_m(p: WebParams, g: Graph | None = None) -> ConstructionReport:
    _require_regime(p, Family.WEB_LARGE_M)
    g = g or make_web(p)
    report = _web_report(p, Family.WEB_LARGE_M, ceil_half(p.m), g)
    block = web_columns(p, range(1, 2 * p.r + 1))
    report.step_assertions.append(_contains(report.chronology, 2 * p.r - 1, "first 2r columns blue", block))
    report.step_assertions += terminus_transfer(g, p, report.set, report.chronology)
    return report


def web_construction(p: WebParams, g: Graph | None = None) -> ConstructionReport:
    """Dispatch to the construction of the regime ``p`` falls in."""
    builder = {
        Family.WEB_SMALL_M: web_construction_small_m,
        Family.WEB_MID_M: web_construction_mid_m,
        Family.WEB_LARGE_M: web_construction_large_m,
    }[web_regime(p.m, p.r)]
    return builder(p, g)


# Staged lower-bound sets -------------------------------------------------------------------

@dataclass
class StageChoices:
    """Free choices of the staged argument; 1-based.

    ``skip[i-1]`` is the untouched layer ``j_i`` of station ``i``; ``position``
    gives ``k_{i,j}`` (defaults to 1); ``third`` is ``"c"`` or ``(i_3, k_3)``.
    """

    skip: Sequence[int] | None = None
    position: dict[tuple[int, int], int] | None = None
    i2: int = 1
    k2: int = 1
    third: str | tuple[int, int] = "c"


@dataclass
class StageSets:
    b1: VertexSet
    b2: VertexSet
    b3: VertexSet
    missed_forts: list[Fort]


def peony_lower_bound_stage_sets(p: PeonyParams, choices: StageChoices | None = None) -> StageSets:
    """Materialise the three staged hitting sets and, for each, a fort of the next family it misses."""
    p.validate()
    choices = choices or StageChoices()
    m, r, s = p.m, p.r, p.s
    skip = list(choices.skip) if choices.skip is not None else [1] * m
    if len(skip) != m or any(not 1 <= j <= r for j in skip):
        raise DomainError(f"need one skipped layer in 1..{r} per station ({m} entries)")
    position = choices.position or {}
    if not 1 <= choices.i2 <= m or not 1 <= choices.k2 <= s:
        raise DomainError("i2 or k2 out of range")

    def k_of(i: int, j: int) -> int:
        k = position.get((i, j), 1)
        if not 1 <= k <= s:
            raise DomainError(f"position {k} outside 1..{s}")
        return k

    n = p.num_vertices
    b1 = VertexSet(
        n, (peony_spoke(p, i, j, k_of(i, j)) for i in range(1, m + 1) for j in range(1, r + 1) if j != skip[i - 1])
    )
    i2 = choices.i2
    b2 = b1 | VertexSet(n, [peony_spoke(p, i2, skip[i2 - 1], choices.k2)])
    if choices.third == "c":
        extra = peony_center(p)
    else:
        i3, k3 = choices.third
        if i3 == i2 or not 1 <= i3 <= m or not 1 <= k3 <= s:
            raise DomainError("third pick must be (i3, k3) with i3 != i2 and indices in range")
        extra = peony_spoke(p, i3, skip[i3 - 1], k3)
    b3 = b2 | VertexSet(n, [extra])

    type2 = fort_type2(p, skip)
    type3 = fort_type3(p, i2, [skip[i - 1] for i in range(1, m + 1) if i != i2])
    # complete b3 to one vertex per layer plus the center, then take the complement
    table = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, r + 1):
            hit = [k for k in range(1, s + 1) if peony_spoke(p, i, j, k) in b3]
            row.append(hit[0] if hit else 1)
        table.append(row)
    type4 = fort_type4(p, table)
    g = make_peony(p)
    for fort, stage in ((type2, b1), (type3, b2), (type4, b3)):
        if not is_fort(g, fort.vertices) or not fort.vertices.isdisjoint(stage):
            raise AssertionError(f"{fort.kind.value} fort does not witness the stage")
    return StageSets(b1, b2, b3, [type2, type3, type4])


def stage_failure_fort(p: PeonyParams, stages: StageSets) -> Fort:
    """The fort left white when forcing from the last stage set stalls."""
    g = make_peony(p)
    if closure(g, stages.b3) == g.all_vertices():
        raise PreconditionError("stage set unexpectedly forces")
    return extract_fort_from_failure(g, stages.b3)

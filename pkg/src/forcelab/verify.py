"""Parameter sweeps and randomized property suites behind ``forcelab verify``.

Each suite returns a list of :class:`CaseResult` rows; a suite passes when
every row does.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .constructions import peony_construction, web_construction, web_formula
from .forcing import (
    ForcePolicy,
    chain_set,
    closure,
    is_zero_forcing_set,
    restrict_chronology,
    run_chronology,
    terminus,
    validate_chronology,
)
from .forts import (
    enumerate_minimal_forts,
    extract_fort_from_failure,
    fort_type1,
    fort_type2,
    fort_type3,
    fort_type4,
    is_fort,
    type2_choices,
    type3_choices,
    type4_choices,
    verify_duality,
)
from .generators import (
    PeonyParams,
    WebParams,
    make_complete,
    make_cycle,
    make_cycle_path_product,
    make_path,
    make_peony,
    make_web,
    random_graph,
)
from .graph import Graph, VertexSet, induced_subgraph
from .solver import path_cover_number, solve_exhaustive, solve_fortbb

CHOICE_EXHAUST_LIMIT = 10_000
CHOICE_SAMPLES = 100


@dataclass
class CaseResult:
    suite: str
    case: str
    expected: object
    actual: object
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "case": self.case,
            "expected": self.expected,
            "actual": self.actual,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 4),
        }


def format_table(rows: Sequence[CaseResult]) -> str:
    header = ("suite", "case", "expected", "actual", "result", "detail")
    body = [
        (r.suite, r.case, str(r.expected), str(r.actual), "PASS" if r.passed else "FAIL", r.detail)
        for r in rows
    ]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip() for line in [header, *body]]
    passed = sum(r.passed for r in rows)
    lines.append(f"{passed}/{len(rows)} passed")
    return "\n".join(lines)


def _map(fn: Callable, items: Sequence, threads: int) -> list:
    if threads > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


# Formula sweeps -----------------------------------------------------------------------

def _solve_checked(g: Graph, cross_check_limit: int) -> tuple[int, str]:
    report = solve_fortbb(g)
    detail = f"fortbb nodes={report.stats.nodes}"
    if g.n <= cross_check_limit:
        z_ex = solve_exhaustive(g).z
        detail += f", exhaustive={z_ex}"
        if z_ex != report.z:
            return -1, detail + " (disagreement)"
    return report.z, detail


def _peony_case(args: tuple[int, int, int, int]) -> CaseResult:
    m, r, s, cross = args
    start = time.perf_counter()
    p = PeonyParams(m, r, s)
    g = make_peony(p)
    expected = m * (r - 1) + 3
    z, detail = _solve_checked(g, cross)
    construction = peony_construction(p, g)
    passed = z == expected and construction.ok
    if not construction.ok:
        detail += ", construction failed"
    return CaseResult("peony", g.name, expected, z, passed, detail, time.perf_counter() - start)


def peony_suite(ms: Iterable[int], rs: Iterable[int], ss: Iterable[int], max_vertices: int = 30,
                cross_check_limit: int = 16, threads: int = 1) -> list[CaseResult]:
    cases = [
        (m, r, s, cross_check_limit)
        for m in ms for r in rs for s in ss
        if PeonyParams(m, r, s).num_vertices <= max_vertices
    ]
    return _map(_peony_case, cases, threads)


def _web_case(args: tuple[int, int, int]) -> CaseResult:
    m, r, cross = args
    start = time.perf_counter()
    p = WebParams(m, r)
    g = make_web(p)
    expected = web_formula(m, r)
    z, detail = _solve_checked(g, cross)
    construction = web_construction(p, g)
    detail = f"{construction.family.value}, {detail}"
    if not construction.ok:
        detail += ", construction failed"
    passed = z == expected and construction.ok
    return CaseResult("web", g.name, expected, z, passed, detail, time.perf_counter() - start)


def web_suite(ms: Iterable[int], rs: Iterable[int], max_vertices: int = 40,
              cross_check_limit: int = 16, threads: int = 1) -> list[CaseResult]:
    cases = [(m, r, cross_check_limit) for m in ms for r in rs if WebParams(m, r).num_vertices <= max_vertices]
    return _map(_web_case, cases, threads)


def _prism_case(args: tuple[int, int, int]) -> CaseResult:
    m, r, cross = args
    start = time.perf_counter()
    g = make_cycle_path_product(m, r)
    expected = min(m, 2 * r)
    z, detail = _solve_checked(g, cross)
    return CaseResult("prism", g.name, expected, z, z == expected, detail, time.perf_counter() - start)


def prism_suite(ms: Iterable[int], rs: Iterable[int], cross_check_limit: int = 16,
                threads: int = 1) -> list[CaseResult]:
    return _map(_prism_case, [(m, r, cross_check_limit) for m in ms for r in rs], threads)


# Fort families -------------------------------------------------------------------------

def _choices(generator, count: int, rng: random.Random) -> list:
    """All choices when there are at most the exhaust limit, else a seeded sample."""
    items = list(generator)
    if count <= CHOICE_EXHAUST_LIMIT:
        return items
    return rng.sample(items, CHOICE_SAMPLES)


def _sample_type4(p: PeonyParams, rng: random.Random) -> list:
    return [[[rng.randint(1, p.s) for _ in range(p.r)] for _ in range(p.m)] for _ in range(CHOICE_SAMPLES)]


def fort_family_suite(ms: Iterable[int] = (3, 4, 5), rs: Iterable[int] = (2, 3), ss: Iterable[int] = (1, 2, 3),
                      seed: int = 0) -> list[CaseResult]:
    rng = random.Random(seed)
    rows = []
    for m in ms:
        for r in rs:
            for s in ss:
                p = PeonyParams(m, r, s)
                g = make_peony(p)
                counts = {}
                failures = 0
                forts = [fort_type1(p, i, j1, j2) for i in range(1, m + 1) for j1, j2 in combinations(range(1, r + 1), 2)]
                counts["type1"] = len(forts)
                t2 = _choices(type2_choices(p), r ** m, rng)
                forts += [fort_type2(p, c) for c in t2]
                counts["type2"] = len(t2)
                t3 = _choices(type3_choices(p), m * r ** (m - 1), rng)
                forts += [fort_type3(p, i0, c) for i0, c in t3]
                counts["type3"] = len(t3)
                n4 = s ** (m * r)
                t4 = list(type4_choices(p)) if n4 <= CHOICE_EXHAUST_LIMIT else _sample_type4(p, rng)
                forts += [fort_type4(p, c) for c in t4]
                counts["type4"] = len(t4)
                failures = sum(not is_fort(g, f.vertices) for f in forts)
                detail = " ".join(f"{k}={v}" for k, v in counts.items())
                rows.append(CaseResult("forts", g.name, 0, failures, failures == 0, detail))
    return rows


# Randomized properties -------------------------------------------------------------------

def random_zfs(g: Graph, rng: random.Random) -> VertexSet:
    """A random zero forcing set: random seed set, grown by random vertices until it forces."""
    members = {v for v in range(g.n) if rng.random() < 0.3}
    while not is_zero_forcing_set(g, g.vertex_set(members)):
        members.add(rng.choice([v for v in range(g.n) if v not in members]))
    return g.vertex_set(members)


def _random_small_graph(rng: random.Random, lo: int, hi: int) -> Graph:
    return random_graph(rng.randint(lo, hi), rng.choice([0.2, 0.3, 0.4, 0.5, 0.7]), rng)


def terminus_suite(trials: int = 500, seed: int = 0, max_n: int = 12) -> list[CaseResult]:
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        g = _random_small_graph(rng, 1, max_n)
        b = random_zfs(g, rng)
        c = run_chronology(g, b, ForcePolicy.RANDOM, rng)
        ok = bool(validate_chronology(g, c, require_complete=True))
        term = terminus(c, g)
        ok = ok and len(term) == len(b) and is_zero_forcing_set(g, term)
        chains = chain_set(c, g)
        ok = ok and sorted(v for ch in chains for v in ch) == list(range(g.n))
        for ch in chains:
            sub, _ = induced_subgraph(g, g.vertex_set(ch))
            ok = ok and sub.num_edges == len(ch) - 1
            ok = ok and all(g.has_edge(a, b_) for a, b_ in zip(ch, ch[1:]))
        if not ok:
            failures.append(t)
    return [CaseResult("core", "terminus", 0, len(failures), not failures, f"trials={trials} seed={seed}")]


def restriction_suite(trials: int = 200, seed: int = 0, max_n: int = 10) -> list[CaseResult]:
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        g = _random_small_graph(rng, 2, max_n)
        b = random_zfs(g, rng)
        c = run_chronology(g, b, ForcePolicy.RANDOM, rng)
        h = g.vertex_set(v for v in range(g.n) if rng.random() < 0.6) or g.vertex_set([rng.randrange(g.n)])
        res = restrict_chronology(g, h, c)
        ok = bool(validate_chronology(res.subgraph, res.chronology, require_complete=True))
        ok = ok and closure(res.subgraph, res.initial) == res.subgraph.all_vertices()
        ok = ok and len(res.initial) <= len(b) + sum(1 for u, v in c.forces() if v in h and u not in h)
        if not ok:
            failures.append(t)
    return [CaseResult("core", "restriction", 0, len(failures), not failures, f"trials={trials} seed={seed}")]


def duality_suite(graphs: Sequence[Graph] | None = None) -> list[CaseResult]:
    graphs = graphs or [make_path(4), make_cycle(5), make_complete(4), make_web(WebParams(3, 1))]
    rows = []
    for g in graphs:
        forts = enumerate_minimal_forts(g)
        disagreements = sum(
            not verify_duality(g, VertexSet.from_bits(g.n, bits), forts) for bits in range(1 << g.n)
        )
        rows.append(CaseResult("core", f"duality {g.name}", 0, disagreements, disagreements == 0,
                               f"subsets={1 << g.n} minimal_forts={len(forts)}"))
    return rows


def path_cover_suite(random_graphs: int = 50, seed: int = 0, max_n: int = 10) -> list[CaseResult]:
    rng = random.Random(seed)
    graphs = [_random_small_graph(rng, 1, max_n) for _ in range(random_graphs)]
    graphs += [make_web(WebParams(3, 1)), make_web(WebParams(4, 1)), make_peony(PeonyParams(3, 2, 1))]
    violations = []
    for g in graphs:
        p, cover = path_cover_number(g)
        z = solve_exhaustive(g).z
        if p > z or len(cover) != p:
            violations.append(g.name)
    return [CaseResult("core", "path cover <= Z", 0, len(violations), not violations,
                       f"graphs={len(graphs)} seed={seed}")]


def fort_extraction_suite(trials: int = 500, seed: int = 0, max_n: int = 12) -> list[CaseResult]:
    rng = random.Random(seed)
    bad = 0
    stalls = 0
    for _ in range(trials):
        g = _random_small_graph(rng, 2, max_n)
        b = g.vertex_set(v for v in range(g.n) if rng.random() < 0.3)
        if is_zero_forcing_set(g, b):
            continue
        stalls += 1
        fort = extract_fort_from_failure(g, b)
        if not (is_fort(g, fort.vertices) and fort.vertices.isdisjoint(b)):
            bad += 1
    return [CaseResult("core", "stall fort", 0, bad, bad == 0, f"stalls={stalls} seed={seed}")]


def core_suite(seed: int = 0) -> list[CaseResult]:
    return (
        terminus_suite(seed=seed)
        + restriction_suite(seed=seed)
        + duality_suite()
        + path_cover_suite(seed=seed)
        + fort_extraction_suite(seed=seed)
    )


# Oracle equivalence ------------------------------------------------------------------------

def oracle_corpus(seed: int = 0, random_graphs: int = 100, max_n: int = 14) -> list[Graph]:
    """Paths, cycles, complete graphs, prisms, small webs and peonies, and random graphs."""
    rng = random.Random(seed)
    graphs = [make_path(n) for n in range(1, max_n + 1)]
    graphs += [make_cycle(n) for n in range(3, max_n + 1)]
    graphs += [make_complete(n) for n in range(1, 9)]
    graphs += [make_cycle_path_product(m, r) for m in range(3, max_n + 1) for r in range(2, max_n // 3 + 1) if m * r <= max_n]
    graphs += [make_web(WebParams(m, r)) for m in range(3, max_n) for r in range(1, 4) if m * (r + 1) <= max_n]
    graphs += [make_peony(PeonyParams(m, r, s)) for m, r, s in [(3, 2, 1), (3, 3, 1), (4, 2, 1)]]
    graphs += [_random_small_graph(rng, 4, max_n) for _ in range(random_graphs)]
    return graphs


def _oracle_case(g: Graph) -> CaseResult:
    start = time.perf_counter()
    a = solve_fortbb(g).z
    b = solve_exhaustive(g).z
    return CaseResult("oracle", g.name or f"n={g.n}", b, a, a == b, "", time.perf_counter() - start)


def oracle_suite(seed: int = 0, threads: int = 1) -> list[CaseResult]:
    return _map(_oracle_case, oracle_corpus(seed), threads)

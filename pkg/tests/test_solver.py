import random
from itertools import combinations

import pytest

from forcelab.errors import UnsupportedError
from forcelab.forcing import is_zero_forcing_set
from forcelab.forts import enumerate_minimal_forts, is_fort
from forcelab.generators import (
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
from forcelab.graph import Graph
from forcelab.solver import (
    induced_paths,
    lower_bound_disjoint_forts,
    min_zfs_enumerate,
    path_cover_number,
    solve,
    solve_exhaustive,
    solve_fortbb,
)

from oracles import adjacency, is_induced_path, naive_count_minimum, naive_path_cover, naive_z


@pytest.mark.parametrize(
    "g,z",
    [
        (make_path(1), 1),
        (make_path(7), 1),
        (make_cycle(7), 2),
        (make_complete(5), 4),
        (Graph(3), 3),
        (make_web(WebParams(3, 1)), 2),
        (make_peony(PeonyParams(3, 2, 2)), 6),
        (make_cycle_path_product(4, 2), 4),
    ],
)
def test_known_values(g, z):
    assert solve_exhaustive(g).z == z
    assert solve_fortbb(g).z == z


def test_solvers_match_naive_oracle():
    rng = random.Random(8)
    for _ in range(60):
        g = random_graph(rng.randint(1, 10), rng.random(), rng)
        expected = naive_z(adjacency(g.n, g.edges))
        for report in (solve_exhaustive(g), solve_fortbb(g)):
            assert report.z == expected
            assert len(report.witness) == expected
            assert is_zero_forcing_set(g, report.witness)


def test_exhaustive_witness_is_lex_first():
    g = make_cycle(6)
    assert solve_exhaustive(g).witness.to_list() == [0, 1]


def test_exhaustive_parallel_agrees():
    g = make_web(WebParams(5, 2))
    seq = solve_exhaustive(g)
    par = solve_exhaustive(g, threads=2)
    assert (seq.z, seq.witness) == (par.z, par.witness)


def test_fortbb_certificate_is_a_real_lower_bound():
    for g in [make_web(WebParams(4, 2)), make_cycle_path_product(5, 2), make_peony(PeonyParams(3, 2, 1))]:
        report = solve_fortbb(g)
        assert all(is_fort(g, f.vertices) for f in report.lower_bound_forts)
        fort_bits = [f.vertices.bits for f in report.lower_bound_forts]
        for combo in combinations(range(g.n), report.z - 1):
            bits = sum(1 << v for v in combo)
            assert not all(bits & f for f in fort_bits)


def test_fortbb_interrupt_reports_bounds():
    g = make_peony(PeonyParams(4, 3, 2))
    report = solve_fortbb(g, time_limit=0.0)
    assert not report.complete
    assert report.lower_bound <= 11 <= report.z
    assert is_zero_forcing_set(g, report.witness)


def test_solve_dispatch_and_cap():
    g = make_path(31)
    assert solve(g, "fortbb").z == 1
    with pytest.raises(UnsupportedError):
        solve(g, "exhaustive")
    assert solve(g, "exhaustive", cap=31).z == 1
    with pytest.raises(ValueError):
        solve(g, "magic")


def test_report_json_shape():
    doc = solve_fortbb(make_cycle(5)).to_json("C5")
    assert doc["graph"] == "C5" and doc["z"] == 2 and doc["algorithm"] == "fortbb"
    assert set(doc["stats"]) >= {"nodes", "wall_time"}


def test_disjoint_fort_packing_bound():
    g = make_path(4)
    forts = enumerate_minimal_forts(g)
    assert lower_bound_disjoint_forts(g, forts) == 1


def test_minimum_set_count_of_small_web_is_frozen():
    # frozen regression: computed by exhaustive enumeration over all 2-subsets
    g = make_web(WebParams(3, 1))
    sets = min_zfs_enumerate(g)
    assert len(sets) == 9
    assert len(sets) == naive_count_minimum(adjacency(g.n, g.edges))


def test_induced_paths_are_induced():
    g = make_web(WebParams(3, 1))
    adj = adjacency(g.n, g.edges)
    paths = induced_paths(g)
    assert all(is_induced_path(adj, list(p)) for p in paths)
    assert len(set(paths)) == len(paths)


def test_path_cover_matches_naive_and_sandwich():
    rng = random.Random(6)
    for _ in range(60):
        g = random_graph(rng.randint(1, 9), rng.random(), rng)
        p, cover = path_cover_number(g)
        assert p == naive_path_cover(adjacency(g.n, g.edges))
        assert sorted(v for path in cover for v in path) == list(range(g.n))
        assert p <= solve_exhaustive(g).z


def test_path_cover_known_values():
    assert path_cover_number(make_path(5))[0] == 1
    assert path_cover_number(make_cycle(5))[0] == 2
    assert path_cover_number(make_complete(4))[0] == 2
    with pytest.raises(UnsupportedError):
        path_cover_number(make_path(16))

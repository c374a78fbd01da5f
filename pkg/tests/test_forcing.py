import random

import pytest

from forcelab.errors import DomainError, PreconditionError
from forcelab.forcing import (
    Chronology,
    ForcePolicy,
    available_forces,
    chain_set,
    closure,
    is_zero_forcing_set,
    restrict_chronology,
    run_chronology,
    terminus,
    validate_chronology,
)
from forcelab.generators import make_complete, make_cycle, make_path, random_graph
from forcelab.graph import Graph, VertexSet

from oracles import adjacency, naive_closure


def test_path_end_forces_everything():
    g = make_path(5)
    c = run_chronology(g, g.vertex_set([0]))
    assert len(c.steps) == 4
    assert c.final() == g.all_vertices()
    assert chain_set(c, g) == [[0, 1, 2, 3, 4]]


def test_path_middle_stalls():
    g = make_path(5)
    assert closure(g, g.vertex_set([2])).to_list() == [2]
    assert not is_zero_forcing_set(g, g.vertex_set([2]))


def test_cycle_single_vertex_stalls_adjacent_pair_forces():
    g = make_cycle(5)
    assert closure(g, g.vertex_set([0])).to_list() == [0]
    assert is_zero_forcing_set(g, g.vertex_set([0, 1]))


def test_complete_graph_needs_all_but_one():
    g = make_complete(5)
    assert is_zero_forcing_set(g, g.vertex_set([0, 1, 2, 3]))
    assert not is_zero_forcing_set(g, g.vertex_set([0, 1, 2]))


def test_closure_matches_naive_reference():
    rng = random.Random(3)
    for _ in range(300):
        g = random_graph(rng.randint(1, 12), rng.random(), rng)
        blue = [v for v in range(g.n) if rng.random() < 0.3]
        expected = sorted(naive_closure(adjacency(g.n, g.edges), blue))
        assert closure(g, g.vertex_set(blue)).to_list() == expected


@pytest.mark.parametrize("policy", [ForcePolicy.ALL_EAGER, ForcePolicy.MAX_CONCURRENT, ForcePolicy.RANDOM])
def test_policies_reach_same_closure(policy):
    rng = random.Random(11)
    for _ in range(100):
        g = random_graph(rng.randint(2, 10), 0.4, rng)
        b = g.vertex_set(v for v in range(g.n) if rng.random() < 0.4)
        c = run_chronology(g, b, policy, random.Random(5))
        assert validate_chronology(g, c)
        assert c.final() == closure(g, b)
        if policy is ForcePolicy.ALL_EAGER:
            assert all(len(step) == 1 for step in c.steps)


def test_max_concurrent_does_every_force_at_once():
    g = make_path(5)
    c = run_chronology(g, g.vertex_set([2, 3]), ForcePolicy.MAX_CONCURRENT)
    assert [len(s) for s in c.steps] == [2, 1]
    c = run_chronology(g, g.vertex_set([2, 3]), ForcePolicy.ALL_EAGER)
    assert [len(s) for s in c.steps] == [1, 1, 1]


def test_random_policy_needs_rng():
    g = make_path(3)
    with pytest.raises(ValueError):
        run_chronology(g, g.vertex_set([0]), ForcePolicy.RANDOM)


def test_available_forces():
    g = make_path(4)
    assert available_forces(g, 0b0110) == [(1, 0), (2, 3)]


def test_expansion_sequence_is_nested():
    g = make_path(6)
    c = run_chronology(g, g.vertex_set([2, 3]), ForcePolicy.MAX_CONCURRENT)
    seq = c.expansion_sequence()
    assert seq[0] == g.vertex_set([2, 3])
    assert all(a.issubset(b) for a, b in zip(seq, seq[1:]))
    assert seq[-1] == c.final() == c.expansion(len(c.steps))


def test_validation_catches_illegal_forces():
    g = make_path(4)
    b = g.vertex_set([0])
    assert not validate_chronology(g, Chronology(b, (((1, 2),),), 4))
    assert not validate_chronology(g, Chronology(b, (((0, 2),),), 4))
    bad = validate_chronology(g, Chronology(g.vertex_set([1]), (((1, 2),),), 4))
    assert not bad and bad.step == 1
    twice = Chronology(g.vertex_set([0, 2]), (((0, 1), (2, 1)),), 4)
    assert not validate_chronology(g, twice)
    partial = Chronology(b, (((0, 1),),), 4)
    assert validate_chronology(g, partial)
    assert not validate_chronology(g, partial, require_complete=True)


def test_empty_time_steps_are_valid():
    g = make_path(3)
    c = Chronology(g.vertex_set([0]), ((), ((0, 1),), (), ((1, 2),)), 3)
    assert validate_chronology(g, c, require_complete=True)


def test_json_round_trip():
    g = make_cycle(6)
    c = run_chronology(g, g.vertex_set([0, 1]), ForcePolicy.MAX_CONCURRENT)
    doc = c.to_json()
    assert doc["initial"] == [0, 1]
    assert doc["steps"][0] == [{"from": 1, "to": 2}, {"from": 0, "to": 5}]
    assert Chronology.from_json(doc, 6) == c


def test_terminus_of_path():
    g = make_path(4)
    c = run_chronology(g, g.vertex_set([0]))
    assert terminus(c, g).to_list() == [3]


def test_terminus_rejects_invalid_chronology():
    g = make_path(3)
    with pytest.raises(DomainError):
        terminus(Chronology(g.vertex_set([1]), (((1, 2),),), 3), g)


def test_chains_partition_and_are_induced_paths():
    rng = random.Random(2)
    for _ in range(100):
        g = random_graph(rng.randint(2, 10), 0.5, rng)
        b = g.vertex_set(v for v in range(g.n) if rng.random() < 0.5)
        if not is_zero_forcing_set(g, b):
            continue
        c = run_chronology(g, b, ForcePolicy.RANDOM, rng)
        chains = chain_set(c, g)
        assert sorted(v for ch in chains for v in ch) == list(range(g.n))
        assert len(chains) == len(c.initial)


def test_restriction_to_a_half_path():
    g = make_path(6)
    c = run_chronology(g, g.vertex_set([0]))
    res = restrict_chronology(g, g.vertex_set([3, 4, 5]), c)
    assert res.initial.to_list() == [0]
    assert res.lift(res.initial).to_list() == [3]
    assert validate_chronology(res.subgraph, res.chronology, require_complete=True)
    assert len(res.chronology.steps) == len(c.steps)


def test_restriction_preconditions():
    g = make_path(4)
    partial = run_chronology(g, g.vertex_set([1]))
    with pytest.raises(PreconditionError):
        restrict_chronology(g, g.vertex_set([0]), partial)
    res = restrict_chronology(g, g.vertex_set([1]), partial, full=False)
    assert res.initial.to_list() == [0]


def test_mismatched_ambient_rejected():
    with pytest.raises(DomainError):
        closure(Graph(3, [(0, 1)]), VertexSet(4, [0]))

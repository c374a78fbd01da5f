import pytest

from forcelab.errors import DomainError, ParameterError
from forcelab.generators import (
    PeonyParams,
    WebParams,
    layer,
    make_cycle_path_product,
    make_path,
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
from forcelab.graph import degree, induced_subgraph


@pytest.mark.parametrize("m,r,s", [(3, 2, 1), (4, 3, 2), (6, 3, 4), (5, 2, 3)])
def test_peony_counts(m, r, s):
    p = PeonyParams(m, r, s)
    g = make_peony(p)
    assert g.n == 1 + m + m * r * s
    assert g.num_edges == m + m * r * (s + 1)
    assert degree(g, peony_center(p)) == m
    for i in range(1, m + 1):
        assert degree(g, peony_hub(p, i)) == 1 + 2 * r
    assert g.name == f"Py({m},{r},{s})"


def test_py634_size():
    assert make_peony(PeonyParams(6, 3, 4)).n == 79


def test_peony_layer_is_path_between_hubs():
    p = PeonyParams(4, 3, 3)
    g = make_peony(p)
    for i in range(1, 5):
        for j in range(1, 4):
            lay = layer(p, i, j)
            assert len(lay) == 3
            sub, _ = induced_subgraph(g, lay)
            assert sub.num_edges == 2
            assert g.has_edge(peony_hub(p, i), peony_spoke(p, i, j, 1))
            assert g.has_edge(peony_spoke(p, i, j, 3), peony_hub(p, i % 4 + 1))
        assert len(station(p, i)) == 1 + 3 * 3


def test_peony_labels():
    p = PeonyParams(3, 2, 2)
    g = make_peony(p)
    assert str(g.label(peony_center(p))) == "c"
    assert str(g.label(peony_spoke(p, 2, 1, 2))) == "v2_1_2"
    assert g.vertex_of("u3") == peony_hub(p, 3)


@pytest.mark.parametrize("m,r,s", [(2, 2, 1), (3, 1, 1), (3, 2, 0)])
def test_peony_bounds(m, r, s):
    with pytest.raises(ParameterError):
        make_peony(PeonyParams(m, r, s))


@pytest.mark.parametrize("m,r", [(3, 1), (5, 3), (16, 3)])
def test_web_counts(m, r):
    p = WebParams(m, r)
    g = make_web(p)
    assert g.n == m * r + m
    assert g.num_edges == 2 * m * r
    for i in range(1, m + 1):
        assert degree(g, web_pendant(p, i)) == 1
        assert g.has_edge(web_pendant(p, i), web_grid(p, i, 1))


def test_wb5_3_size():
    assert make_web(WebParams(5, 3)).n == 20


def test_web_wraps_cyclically():
    p = WebParams(5, 2)
    g = make_web(p)
    assert g.has_edge(web_grid(p, 5, 2), web_grid(p, 1, 2))
    assert len(web_columns(p, [1, 2])) == 2 * 2 + 2
    assert len(web_columns(p, [1, 2], pendants=False)) == 4


def test_prism_and_bounds():
    g = make_cycle_path_product(4, 2)
    assert g.n == 8 and g.num_edges == 12
    with pytest.raises(ParameterError):
        make_web(WebParams(2, 1))
    with pytest.raises(ParameterError):
        make_path(0)
    with pytest.raises(DomainError):
        peony_spoke(PeonyParams(3, 2, 1), 1, 3, 1)

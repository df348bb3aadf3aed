import math
import random

import pytest

import owc.domination as dom
from owc.domination import (
    MODE_DOMINATING,
    MODE_OCON,
    MODE_OWC,
    SCRIPT_P_CONVEX,
    _colex_unrank,
    _next_colex,
    domination_number,
    enumerate_min_owc_sets,
    is_dominating,
    is_outer_convex_dominating,
    is_owc_dominating,
    isolated_in_induced,
    outer_convex_domination_number,
    owc_domination_number,
    script_p,
    script_p_realizer,
    sets_of_size,
)
from owc.graphs import (
    VertexSet,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    graph_from_edge_list,
    path_graph,
    star_graph,
)

from naive import (
    naive_convex,
    naive_domination_number,
    naive_dominating,
    naive_min_sets,
    naive_owc_dominating,
    naive_owc_domination_number,
    naive_script_p,
    random_connected_graph,
    subsets_as_vertexsets,
)

FAMILIES = [
    path_graph(2), path_graph(3), path_graph(4), path_graph(5), path_graph(6),
    cycle_graph(3), cycle_graph(4), cycle_graph(5), cycle_graph(6),
    complete_graph(4), complete_graph(5),
    star_graph(3), star_graph(4),
    complete_bipartite_graph(2, 2), complete_bipartite_graph(2, 3),
]


def random_pool(seed, count, lo=5, hi=8):
    rng = random.Random(seed)
    return [random_connected_graph(rng, rng.randint(lo, hi)) for _ in range(count)]


def naive_ocon_dominating(g, members):
    comp = [v for v in range(g.order) if v not in set(members)]
    return naive_dominating(g, members) and naive_convex(g, comp)


def test_predicates_match_naive_exhaustive():
    for g in FAMILIES[:8]:
        for s in subsets_as_vertexsets(g.order):
            members = s.vertices()
            assert is_dominating(g, s) == naive_dominating(g, members)
            assert is_owc_dominating(g, s) == naive_owc_dominating(g, members)
            assert is_outer_convex_dominating(g, s) == naive_ocon_dominating(g, members)


def test_isolated_in_induced():
    g = star_graph(3)
    assert isolated_in_induced(g, VertexSet.of(4, [1, 2])).vertices() == (1, 2)
    assert isolated_in_induced(g, VertexSet.of(4, [0, 1])).vertices() == ()
    assert isolated_in_induced(g, VertexSet.of(4, [0, 1, 2])).vertices() == ()
    assert not isolated_in_induced(g, VertexSet.empty(4))


def test_numbers_match_naive_on_families():
    for g in FAMILIES:
        assert domination_number(g).value == naive_domination_number(g), g.name
        assert owc_domination_number(g).value == naive_owc_domination_number(g), g.name
        k, _ = naive_min_sets(g, naive_ocon_dominating)
        assert outer_convex_domination_number(g).value == k, g.name


def test_numbers_match_naive_on_random_graphs():
    for g in random_pool(101, 25):
        assert domination_number(g).value == naive_domination_number(g)
        assert owc_domination_number(g).value == naive_owc_domination_number(g)


def test_known_values():
    assert owc_domination_number(path_graph(2)).value == 1
    assert owc_domination_number(path_graph(3)).value == 2
    assert owc_domination_number(cycle_graph(4)).value == 2
    assert owc_domination_number(cycle_graph(5)).value == 3
    assert owc_domination_number(cycle_graph(6)).value == 4
    assert owc_domination_number(star_graph(3)).value == 3
    assert owc_domination_number(complete_graph(5)).value == 1
    assert domination_number(star_graph(3)).value == 1


def test_witness_is_canonical_minimum():
    for g in FAMILIES + random_pool(55, 10):
        res = owc_domination_number(g)
        k, hits = naive_min_sets(g, naive_owc_dominating)
        assert res.value == k
        assert res.witness.vertices() == min(hits)
        assert is_owc_dominating(g, res.witness)


def test_examined_counts_whole_levels():
    g = path_graph(5)
    res = owc_domination_number(g)
    assert res.value == 3
    assert res.examined == sum(math.comb(5, k) for k in (1, 2, 3))
    assert res.elapsed >= 0.0


def test_enumerate_min_owc_sets():
    assert [s.vertices() for s in enumerate_min_owc_sets(path_graph(3))] == [
        (0, 1), (0, 2), (1, 2)]
    assert [s.vertices() for s in enumerate_min_owc_sets(cycle_graph(4))] == [
        (0, 1), (0, 3), (1, 2), (2, 3)]
    for g in random_pool(77, 10):
        _, hits = naive_min_sets(g, naive_owc_dominating)
        assert [s.vertices() for s in enumerate_min_owc_sets(g)] == sorted(hits)


def test_sets_of_size():
    got = sets_of_size(path_graph(4), 2, MODE_DOMINATING)
    expect = [c for c in naive_min_sets(path_graph(4), naive_dominating)[1]]
    assert [s.vertices() for s in got] == sorted(expect)
    assert sets_of_size(path_graph(3), 1, MODE_OWC) == []
    with pytest.raises(ValueError):
        sets_of_size(path_graph(3), 0)
    with pytest.raises(ValueError):
        sets_of_size(path_graph(3), 4)


def test_script_p_values():
    assert script_p(path_graph(3)) == 0
    assert script_p(star_graph(3)) == 0
    assert script_p(path_graph(2)) == 1
    assert script_p(cycle_graph(4)) == 0
    assert script_p(path_graph(5)) == 1
    for g in FAMILIES + random_pool(31, 10):
        assert script_p(g) == naive_script_p(g), g.name


def test_script_p_convex_mode():
    # C4: adjacent pairs are outer-convex dominating, so the convex-mode
    # minimum exists and is 0
    assert script_p(cycle_graph(4), mode=SCRIPT_P_CONVEX) == 0
    # diamond: gamma_wcon is 1 via either hub, but I[2,3] crosses both hubs,
    # so no singleton has a convex complement
    g = graph_from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert owc_domination_number(g).value == 1
    assert all(not naive_ocon_dominating(g, c.vertices())
               for c in subsets_as_vertexsets(4) if len(c) == 1)
    assert script_p(g, mode=SCRIPT_P_CONVEX) is None
    with pytest.raises(ValueError):
        script_p(g, mode="nope")


def test_script_p_realizer():
    s, p = script_p_realizer(path_graph(3))
    assert s.vertices() == (0, 1)
    assert p == 0
    s, p = script_p_realizer(path_graph(2))
    assert s.vertices() == (0,)
    assert p == 1
    for g in random_pool(43, 8):
        s, p = script_p_realizer(g)
        assert p == script_p(g)
        assert len(s) == owc_domination_number(g).value
        assert len(isolated_in_induced(g, s)) == p


def test_rejects_disconnected_and_oversize():
    g = graph_from_edge_list(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError, match="connected"):
        owc_domination_number(g)
    with pytest.raises(ValueError, match="cap"):
        owc_domination_number(path_graph(6), cap=5)


def test_colex_iteration_and_unranking():
    # colex order of 3-subsets of an 6-universe, smallest mask first
    masks = []
    s = (1 << 3) - 1
    for _ in range(math.comb(6, 3)):
        masks.append(s)
        s = _next_colex(s)
    assert masks == sorted(masks)
    assert len(set(masks)) == len(masks)
    assert all(bin(m).count("1") == 3 for m in masks)
    for rank, mask in enumerate(masks):
        assert _colex_unrank(rank, 3) == mask


def test_parallel_scan_matches_serial(monkeypatch):
    monkeypatch.setattr(dom, "_PARALLEL_THRESHOLD", 1)
    for g in [path_graph(5), cycle_graph(6)] + random_pool(9, 4, lo=6, hi=8):
        serial = owc_domination_number(g, workers=1)
        parallel = owc_domination_number(g, workers=2)
        assert (serial.value, serial.witness) == (parallel.value, parallel.witness)
        assert serial.examined == parallel.examined
        assert enumerate_min_owc_sets(g, workers=2) == enumerate_min_owc_sets(g)

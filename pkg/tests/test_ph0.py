import random

import pytest

from extph.datasets import gen_erdos_renyi
from extph.errors import FiltrationMismatch
from extph.graph import Graph, TieBreakPolicy, build_lower_filtration, build_upper_filtration
from extph.ph0 import component_extrema, ph0
from extph.verify import component_count

EPS = TieBreakPolicy(epsilon=0.001)


def _lower(g):
    return ph0(g, build_lower_filtration(g, EPS))


def _upper(g):
    return ph0(g, build_upper_filtration(g, EPS))


def test_path_graph_hand_trace():
    g = Graph(3, [(0, 1), (1, 2)], [0.0, 1.0, 2.0])
    res = _lower(g)
    assert [(b, d, bv, de) for b, d, bv, de in res.bars] == [
        (1.0, 1.0, 1, 0),
        (2.0, 2.0, 2, 1),
    ]
    assert res.negative_edges == [0, 1]
    assert res.positive_edges == []


def test_triangle_counts():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)], [0.0, 1.0, 2.0])
    res = _lower(g)
    assert len(res.bars) == 2
    assert len(res.positive_edges) == 1


def test_isolated_vertices_no_bars():
    g = Graph(4, [], [0.0, 1.0, 2.0, 3.0])
    res = _lower(g)
    assert res.bars == [] and res.negative_edges == [] and res.positive_edges == []


def test_filtration_mismatch():
    g = Graph(3, [(0, 1), (1, 2)], [0.0, 1.0, 2.0])
    other = build_lower_filtration(Graph(4, [(0, 1)], [0.0, 1.0, 2.0, 3.0]), EPS)
    with pytest.raises(FiltrationMismatch):
        ph0(g, other)


def test_counts_and_interval_direction_on_random_graphs():
    rng = random.Random(0)
    for i in range(300):
        g = gen_erdos_renyi(rng.randint(1, 40), rng.random() * 0.6, seed=i)
        c = component_count(g)
        low = _lower(g)
        up = _upper(g)
        assert len(low.bars) == g.num_vertices - c == len(low.negative_edges)
        assert len(up.bars) == g.num_vertices - c
        assert len(low.positive_edges) == g.num_edges - (g.num_vertices - c)
        assert all(b <= d for b, d, _, _ in low.bars)
        assert all(b >= d for b, d, _, _ in up.bars)
        assert set(low.positive_edges) | set(low.negative_edges) == set(range(g.num_edges))
        assert not set(low.positive_edges) & set(low.negative_edges)


def test_negative_edges_form_spanning_forest():
    rng = random.Random(1)
    for i in range(100):
        g = gen_erdos_renyi(rng.randint(2, 30), rng.random() * 0.7, seed=1000 + i)
        res = _lower(g)
        parent = list(range(g.num_vertices))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in res.negative_edges:
            u, v = g.edges[e]
            ru, rv = find(u), find(v)
            assert ru != rv, "negative edges contain a cycle"
            parent[ru] = rv
        # spanning: adding them reaches the same component count
        comps = len({find(v) for v in range(g.num_vertices)})
        assert comps == component_count(g)


def test_elder_rule_against_naive_rescan():
    """Birth vertex must be the larger-valued (lower) of the two merged roots."""
    rng = random.Random(2)
    for i in range(60):
        g = gen_erdos_renyi(rng.randint(2, 25), rng.random() * 0.6, seed=2000 + i)
        filt = build_lower_filtration(g)
        comps = {v: {v} for v in range(g.num_vertices)}
        where = list(range(g.num_vertices))
        bars = iter(ph0(g, filt).bars)
        for e in filt.edge_scan_order():
            u, v = g.edges[int(e)]
            cu, cv = where[u], where[v]
            if cu == cv:
                continue
            min_u = min(comps[cu], key=lambda x: g.vertex_values[x])
            min_v = min(comps[cv], key=lambda x: g.vertex_values[x])
            dying = max((min_u, min_v), key=lambda x: g.vertex_values[x])
            b, d, bv, de = next(bars)
            assert bv == dying and de == int(e)
            assert b == g.vertex_values[dying]
            merged = comps[cu] | comps[cv]
            comps[cu] = comps[cv] = merged
            for x in merged:
                where[x] = cu
        assert next(bars, None) is None


def test_component_extrema_examples():
    g = Graph(3, [(0, 1), (1, 2)], [0.0, 1.0, 2.0])
    ext = component_extrema(_upper(g).forest, _lower(g).forest, g)
    assert ext == [(0.0, 2.0, 0, 2)]

    g2 = Graph(4, [(0, 1), (2, 3)], [0.0, 1.0, 5.0, 7.0])
    ext2 = component_extrema(_upper(g2).forest, _lower(g2).forest, g2)
    assert [(b, d) for b, d, _, _ in ext2] == [(0.0, 1.0), (5.0, 7.0)]

    g3 = Graph(1, [], [3.0])
    ext3 = component_extrema(_upper(g3).forest, _lower(g3).forest, g3)
    assert ext3 == [(3.0, 3.0, 0, 0)]

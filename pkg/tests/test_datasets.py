import filecmp

import pytest

from extph.datasets import (
    DatasetSpec,
    cycle_length_histogram,
    gen_erdos_renyi,
    gen_pinwheels,
    gen_two_cycles,
    two_cycle_graph,
    write_dataset,
)
from extph.extended import compute_extended_persistence
from extph.graph import Graph
from extph.verify import component_count, named_graph


def _betti1(g):
    return g.num_edges - g.num_vertices + component_count(g)


def test_pinwheel_cycle_counts():
    for g, label in gen_pinwheels(20, seed=0):
        assert _betti1(g) == (2 if label == 0 else 1)
        assert component_count(g) == (2 if label == 0 else 1)


def test_pinwheel_size_zero_bare_skeletons():
    items = gen_pinwheels(2, seed=1, pinwheel_size_range=(0, 0))
    g0, l0 = items[0]
    g1, l1 = items[1]
    assert (l0, l1) == (0, 1)
    assert (g0.num_vertices, g0.num_edges) == (6, 6)   # two triangles
    assert (g1.num_vertices, g1.num_edges) == (6, 6)   # hexagon


def test_pinwheel_count_rule_classifies_perfectly():
    for g, label in gen_pinwheels(200, seed=2):
        bc = compute_extended_persistence(g, with_cycles=False)
        assert (len(bc.b1_ext) >= 2) == (label == 0)


def test_two_cycles_structure():
    for g, label in gen_two_cycles(40, seed=3):
        assert g.num_vertices == 100 and g.num_edges == 100
        assert component_count(g) == 2
        bc = compute_extended_persistence(g)
        assert len(bc.b1_ext) == 2
        lengths = sorted(len(rep) for rep in bc.cycles)
        comp_sizes = sorted(_component_sizes(g))
        assert lengths == comp_sizes
        assert sum(lengths) == 100
        gap = lengths[1] - lengths[0]
        assert (gap > 20) == (label == 0)


def _component_sizes(g: Graph):
    parent = list(range(g.num_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    sizes = {}
    for v in range(g.num_vertices):
        sizes[find(v)] = sizes.get(find(v), 0) + 1
    return list(sizes.values())


def test_erdos_renyi_extremes():
    assert gen_erdos_renyi(10, 0.0, seed=0).num_edges == 0
    assert gen_erdos_renyi(10, 1.0, seed=0).num_edges == 45
    with pytest.raises(ValueError):
        gen_erdos_renyi(5, 1.5, seed=0)


def test_erdos_renyi_determinism():
    a = gen_erdos_renyi(200, 0.1, seed=77)
    b = gen_erdos_renyi(200, 0.1, seed=77)
    assert a.edges == b.edges
    assert a.vertex_values.tolist() == b.vertex_values.tolist()


def test_histogram_examples():
    tri = Graph(3, [(0, 1), (1, 2), (0, 2)], [0.0, 1.0, 2.0])
    assert cycle_length_histogram(tri, compute_extended_persistence(tri)) == {3: 1}

    g = two_cycle_graph(3, 50, 5)
    assert cycle_length_histogram(g, compute_extended_persistence(g)) == {3: 1, 50: 1}


def test_histogram_k5_total():
    g = named_graph("K5", seed=1)
    bc = compute_extended_persistence(g)
    hist = cycle_length_histogram(g, bc)
    assert sum(hist.values()) == _betti1(g) == 6
    # observation, not assertion: the spanning-forest basis favors short cycles
    print(f"K5 cycle-length histogram: {hist}")


def test_write_dataset_files_and_determinism(tmp_path):
    spec = DatasetSpec(family="two_cycles", count=6, seed=9)
    d1 = tmp_path / "a"
    d2 = tmp_path / "b"
    write_dataset(spec, d1)
    write_dataset(spec, d2)
    names = sorted(p.name for p in d1.iterdir())
    assert names == [f"graph_{i:05d}.json" for i in range(6)] + ["labels.csv"]
    for name in names:
        assert filecmp.cmp(d1 / name, d2 / name, shallow=False), name
    labels = (d1 / "labels.csv").read_text().strip().splitlines()
    assert labels[0] == "index,label"
    assert [row.split(",")[1] for row in labels[1:]] == ["0", "1"] * 3


def test_dataset_spec_validation():
    with pytest.raises(ValueError):
        DatasetSpec(family="nope")

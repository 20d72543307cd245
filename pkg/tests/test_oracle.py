import random
import time

from extph.datasets import gen_erdos_renyi
from extph.extended import compute_extended_persistence
from extph.graph import Graph, TieBreakPolicy
from extph.oracle import build_coned_filtration, oracle_barcode, reduce_and_pair
from extph.verify import bar_multiset

TRIANGLE = Graph(3, [(0, 1), (1, 2), (0, 2)], [0.0, 1.0, 2.0])
EPS = TieBreakPolicy(epsilon=0.001)


def test_coned_sizes():
    assert len(build_coned_filtration(TRIANGLE, EPS).simplices) == 13
    assert len(build_coned_filtration(Graph(3, [(0, 1), (1, 2)], [0.0, 1.0, 2.0])).simplices) == 11
    # the cone vertex must enter first for the reduction to pair B0_ext
    single = build_coned_filtration(Graph(1, [], [3.0]))
    assert single.simplices == [("omega",), ("v", 0), ("cv", 0)]


def test_every_simplex_after_its_faces():
    rng = random.Random(0)
    for i in range(50):
        g = gen_erdos_renyi(rng.randint(1, 15), rng.random() * 0.6, seed=i)
        cf = build_coned_filtration(g)
        for pos, faces in enumerate(cf.boundaries):
            assert all(fp < pos for fp in faces)


def test_triangle_matches_fast_path():
    assert bar_multiset(oracle_barcode(TRIANGLE, EPS)) == bar_multiset(
        compute_extended_persistence(TRIANGLE, EPS)
    )


def test_forest_no_cycle_bars():
    g = Graph(4, [(0, 1), (2, 3)], [0.0, 1.0, 2.0, 3.0])
    bc = oracle_barcode(g)
    assert bc.b1_ext == []
    assert len(bc.b0_ext) == 2


def test_two_disjoint_triangles():
    g = Graph(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        [0.0, 1.0, 2.0, 3.0, 4.0, 5.0],
    )
    bc = oracle_barcode(g)
    assert len(bc.b0_ext) == 2 and len(bc.b1_ext) == 2


def test_interleavings_agree():
    rng = random.Random(1)
    for i in range(100):
        g = gen_erdos_renyi(rng.randint(1, 12), rng.random() * 0.7, seed=100 + i)
        a = bar_multiset(oracle_barcode(g, variant="interleaved"))
        b = bar_multiset(oracle_barcode(g, variant="grouped"))
        assert a == b


def test_reduction_invariant_unique_lows():
    rng = random.Random(2)
    for i in range(30):
        g = gen_erdos_renyi(rng.randint(2, 12), rng.random() * 0.7, seed=200 + i)
        cf = build_coned_filtration(g)
        columns = []
        lows = set()
        for j in range(len(cf.simplices)):
            col = 0
            for r in cf.boundaries[j]:
                col ^= 1 << r
            while col:
                low = col.bit_length() - 1
                hit = next((c for l, c in columns if l == low), None)
                if hit is None:
                    break
                col ^= hit
            if col:
                low = col.bit_length() - 1
                assert low not in lows
                lows.add(low)
                columns.append((low, col))


def test_pair_partition_every_simplex_once_per_role():
    """Each vertex/edge appears once in a lower role and once in an upper role."""
    rng = random.Random(3)
    for i in range(40):
        g = gen_erdos_renyi(rng.randint(1, 12), rng.random() * 0.7, seed=300 + i)
        bc = oracle_barcode(g)
        vertex_lower = [b.birth_simplex for b in bc.b0_low] + [b.birth_simplex for b in bc.b0_ext]
        vertex_upper = [b.birth_simplex for b in bc.b0_up] + [b.death_simplex for b in bc.b0_ext]
        edge_lower = [b.death_simplex for b in bc.b0_low] + [b.birth_simplex for b in bc.b1_ext]
        edge_upper = [b.death_simplex for b in bc.b0_up] + [b.death_simplex for b in bc.b1_ext]
        assert sorted(vertex_lower) == list(range(g.num_vertices))
        assert sorted(vertex_upper) == list(range(g.num_vertices))
        assert sorted(edge_lower) == list(range(g.num_edges))
        assert sorted(edge_upper) == list(range(g.num_edges))


def test_small_graph_runtime_ceiling():
    g = gen_erdos_renyi(12, 0.5, seed=9)
    t0 = time.perf_counter()
    reduce_and_pair(build_coned_filtration(g))
    assert time.perf_counter() - t0 < 0.05

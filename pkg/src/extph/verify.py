"""Named property battery behind the CLI verify subcommand.

Each check returns {name, passed, details}; the battery report is JSON-ready.
A deliberate fault can be injected to prove the harness catches corruption.
"""

from __future__ import annotations

import math
import random

from .datasets import gen_erdos_renyi
from .expressivity import (
    build_cc_size_filtration,
    build_cycle_length_filtration,
    estimate_max_bar_statistics,
)
from .extended import bar_base_values, compute_extended_persistence
from .graph import Graph
from .oracle import oracle_barcode

__all__ = ["run_battery", "named_graph", "component_count", "cycle_rank", "bar_multiset"]


def component_count(g: Graph) -> int:
    parent = list(range(g.num_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    comps = g.num_vertices
    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def named_graph(name: str, seed: int = 0) -> Graph:
    """K<n> cliques and C<n> cycles with seeded distinct values."""
    kind, num = name[0].upper(), int(name[1:])
    rng = random.Random(seed)
    values = [rng.random() for _ in range(num)]
    if kind == "K":
        edges = [(i, j) for i in range(num) for j in range(i + 1, num)]
    elif kind == "C":
        edges = [(i, (i + 1) % num) for i in range(num)]
    else:
        raise ValueError(f"unknown graph name {name!r}")
    return Graph(num, edges, values)


def bar_multiset(bc, include_kind=True):
    out = []
    for bar in bc.bars():
        out.append((bar.birth, bar.death, bar.kind) if include_kind else (bar.birth, bar.death))
    return sorted(out)


def cycle_rank(g: Graph, barcode) -> int:
    """GF(2) rank of the representatives as edge-incidence vectors."""
    edge_pos = {frozenset(e): i for i, e in enumerate(g.edges)}
    rows = []
    for rep in barcode.cycles:
        mask = 0
        vs = rep.vertices
        for i in range(len(vs)):
            mask ^= 1 << edge_pos[frozenset((vs[i], vs[(i + 1) % len(vs)]))]
        rows.append(mask)
    rank = 0
    basis = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            rank += 1
    return rank


def _random_er(rng: random.Random, max_n: int):
    n = rng.randint(1, max_n)
    p = rng.random() * 0.5
    return gen_erdos_renyi(n, p, rng.randrange(2**31))


def _check_counts(graphs: int, max_n: int, seed: int, inject_fault: bool):
    rng = random.Random(seed)
    for i in range(graphs):
        g = _random_er(rng, max_n)
        bc = compute_extended_persistence(g)
        c = component_count(g)
        n, m = g.num_vertices, g.num_edges
        counts = bc.counts()
        if inject_fault and i == 0:
            counts = (counts[0] + 1,) + counts[1:]
        if counts != (n - c, n - c, c, m - n + c):
            return False, f"graph {i}: counts {counts} != Theorem-1 ({n=}, {m=}, C={c})"
        if any(not math.isfinite(b.birth) or not math.isfinite(b.death) for b in bc.bars()):
            return False, f"graph {i}: non-finite bar"
    return True, f"{graphs} graphs"


def _check_oracle(graphs: int, max_n: int, seed: int):
    rng = random.Random(seed)
    for i in range(graphs):
        g = _random_er(rng, max_n)
        fast = bar_multiset(compute_extended_persistence(g, with_cycles=False))
        slow = bar_multiset(oracle_barcode(g))
        if fast != slow:
            return False, f"graph {i}: fast/oracle multisets differ"
    return True, f"{graphs} graphs, n <= {max_n}"


def _check_cycle_rank(graphs: int, max_n: int, seed: int):
    rng = random.Random(seed)
    for i in range(graphs):
        g = _random_er(rng, max_n)
        bc = compute_extended_persistence(g)
        expected = g.num_edges - g.num_vertices + component_count(g)
        got = cycle_rank(g, bc)
        if got != expected:
            return False, f"graph {i}: rank {got} != {expected}"
    return True, f"{graphs} graphs"


def _check_permutation(graphs: int, max_n: int, seed: int):
    rng = random.Random(seed)
    for i in range(graphs):
        g = _random_er(rng, max_n)
        ref = bar_multiset(compute_extended_persistence(g))
        perm = list(range(g.num_vertices))
        rng.shuffle(perm)
        values = [0.0] * g.num_vertices
        for old, new in enumerate(perm):
            values[new] = float(g.vertex_values[old])
        pg = Graph(g.num_vertices, [(perm[u], perm[v]) for u, v in g.edges], values)
        if bar_multiset(compute_extended_persistence(pg)) != ref:
            return False, f"graph {i}: barcode changed under relabeling"
    return True, f"{graphs} graphs"


def _check_observation1(kmax: int):
    for k in range(3, kmax + 1):
        edges = [(i, (i + 1) % k) for i in range(k)]
        g0 = Graph(k, edges, [0.0] * k)
        values, (b, d) = build_cycle_length_filtration(g0, list(range(k)))
        gk = Graph(k, edges, values)
        bc = compute_extended_persistence(gk)
        bars = [bar_base_values(bar, gk) for bar in bc.b1_ext]
        if (b, d) not in bars or (b - d) != k - 1:
            return False, f"k={k}: predicted bar {(b, d)} absent ({bars})"
    return True, f"k in [3,{kmax}]"


def _check_observation2(graphs: int, seed: int):
    rng = random.Random(seed)
    for i in range(graphs):
        g = _random_er(rng, 40)
        values = build_cc_size_filtration(g)
        g2 = Graph(g.num_vertices, g.edges, values)
        bc = compute_extended_persistence(g2)
        sizes = sorted(b.death - b.birth + 1 for b in bc.b0_ext)
        comp_sizes = _component_sizes(g2)
        if sizes != sorted(comp_sizes):
            return False, f"graph {i}: persistences+1 {sizes} != sizes {sorted(comp_sizes)}"
    return True, f"{graphs} graphs"


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
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return list(sizes.values())


def _check_observation3(trials: int, names, seed: int):
    from dataclasses import asdict

    details = []
    reports = {}
    for name in names:
        g = named_graph(name, seed=seed)
        rep = estimate_max_bar_statistics(g, trials, seed=seed + 1)
        reports[name] = asdict(rep)
        p = rep.theoretical_probability
        sigma = math.sqrt(max(p * (1 - p), 1e-12) / trials)
        bound = max(3 * sigma, 1e-9)
        details.append(f"{name}: emp={rep.empirical_probability:.4f} theo={p:.4f}")
        if abs(rep.empirical_probability - p) > bound:
            return False, f"{name}: |{rep.empirical_probability} - {p}| > 3 sigma {bound}", reports
    return True, "; ".join(details), reports


def _check_corollary(trials: int, sizes, seed: int):
    tol = max(0.02, 0.02 * math.sqrt(10000.0 / trials))
    details = []
    for n in sizes:
        g = named_graph(f"K{n}", seed=seed)
        rep = estimate_max_bar_statistics(g, trials, seed=seed + 1)
        target = (n - 1) / (n + 1)
        details.append(f"K{n}: mean={rep.empirical_mean_persistence:.4f} target={target:.4f}")
        if abs(rep.empirical_mean_persistence - target) > tol:
            return False, details[-1] + f" (tol {tol})"
    return True, "; ".join(details)


def run_battery(
    trials: int = 2000,
    graphs=("K4", "C5"),
    seed: int = 0,
    inject_fault: bool = False,
    counts_graphs: int = 200,
    oracle_graphs: int = 120,
):
    checks = [
        ("theorem1_counts", lambda: _check_counts(counts_graphs, 60, seed, inject_fault)),
        ("oracle_equivalence", lambda: _check_oracle(oracle_graphs, 10, seed + 1)),
        ("cycle_basis_rank", lambda: _check_cycle_rank(50, 30, seed + 2)),
        ("permutation_invariance", lambda: _check_permutation(40, 40, seed + 3)),
        ("observation1_cycle_length", lambda: _check_observation1(12)),
        ("observation2_component_size", lambda: _check_observation2(25, seed + 4)),
        ("observation3_max_bar", lambda: _check_observation3(trials, graphs, seed + 5)),
        ("corollary_mean_persistence", lambda: _check_corollary(trials, (3, 5), seed + 6)),
    ]
    report = {"checks": [], "passed": True}
    for name, fn in checks:
        result = fn()
        entry = {"name": name, "passed": result[0], "details": result[1]}
        if len(result) > 2:
            entry["monte_carlo"] = result[2]
        report["checks"].append(entry)
        report["passed"] = report["passed"] and result[0]
    return report

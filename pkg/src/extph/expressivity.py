"""Constructive filtrations and Monte-Carlo checks for the expressivity claims.

build_cycle_length_filtration assigns the k largest values n-1..n-k around a
chordless cycle so its length appears as the persistence of one cycle bar;
build_cc_size_filtration numbers each component consecutively so component
sizes appear as b0_ext persistences; estimate_max_bar_statistics verifies
that on bridgeless graphs with U(0,1) values the maximal bar [max,min]
appears whenever the (argmin,argmax) edge exists, an event of probability
2m/(n(n-1)).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, asdict

import numpy as np

from .errors import ExtphError, HasBridge, NotACycle, NotChordless
from .extended import bar_base_values, compute_extended_persistence
from .graph import Graph

__all__ = [
    "MonteCarloReport",
    "find_bridges",
    "build_cycle_length_filtration",
    "build_cc_size_filtration",
    "estimate_max_bar_statistics",
]


@dataclass
class MonteCarloReport:
    trials: int
    hit_count: int
    empirical_probability: float
    empirical_mean_persistence: float
    theoretical_probability: float
    theoretical_mean: float

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def _adjacency(g: Graph):
    adj = [[] for _ in range(g.num_vertices)]
    for idx, (u, v) in enumerate(g.edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    return adj


def find_bridges(g: Graph):
    """Edge indices whose removal disconnects their component (iterative low-link)."""
    n = g.num_vertices
    adj = _adjacency(g)
    disc = [-1] * n
    low = [0] * n
    bridges = []
    timer = 0
    for start in range(n):
        if disc[start] != -1:
            continue
        stack = [(start, -1, iter(adj[start]))]
        disc[start] = low[start] = timer
        timer += 1
        while stack:
            v, in_edge, it = stack[-1]
            advanced = False
            for w, eidx in it:
                if eidx == in_edge:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eidx, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.append(in_edge)
    return bridges


def _check_cycle(g: Graph, cycle):
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise NotACycle("need at least three distinct vertices")
    edge_set = {frozenset(e) for e in g.edges}
    for i in range(k):
        if frozenset((cycle[i], cycle[(i + 1) % k])) not in edge_set:
            raise NotACycle(f"missing edge ({cycle[i]},{cycle[(i + 1) % k]})")
    members = set(cycle)
    ring = {frozenset((cycle[i], cycle[(i + 1) % k])) for i in range(k)}
    for u, v in g.edges:
        if u in members and v in members and frozenset((u, v)) not in ring:
            raise NotChordless(f"chord ({u},{v}) inside the target cycle")


def build_cycle_length_filtration(g: Graph, target_cycle):
    """Vertex values making the chordless cycle's length readable from one bar.

    Returns (vertex_values, (n-1, n-k)): the predicted cycle bar in base
    units, whose persistence is exactly k-1.
    """
    _check_cycle(g, target_cycle)
    n, k = g.num_vertices, len(target_cycle)
    values = np.empty(n)
    filler = n - k - 1
    on_cycle = set(target_cycle)
    for v in range(n):
        if v not in on_cycle:
            values[v] = filler
            filler -= 1
    for i, v in enumerate(target_cycle):
        values[v] = n - 1 - i
    return values, (float(n - 1), float(n - k))


def build_cc_size_filtration(g: Graph) -> np.ndarray:
    """Consecutive integer values per connected component (0..size-1, then on)."""
    n = g.num_vertices
    adj = _adjacency(g)
    values = np.full(n, -1.0)
    counter = 0
    for start in range(n):
        if values[start] >= 0:
            continue
        stack = [start]
        values[start] = counter
        counter += 1
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if values[w] < 0:
                    values[w] = counter
                    counter += 1
                    stack.append(w)
    return values


def estimate_max_bar_statistics(g: Graph, trials: int, seed: int = 0) -> MonteCarloReport:
    """Monte-Carlo check of the maximal-bar observation on one graph.

    A trial is a hit when the sampled argmin/argmax vertices are adjacent;
    the theory then guarantees the cycle bar [max,min], which is asserted on
    every hit (in base units, tolerance 0).  Mean persistence is averaged
    over hits and compared with (n-1)/(n+1).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if g.num_vertices < 2:
        raise ValueError("need at least two vertices")
    if find_bridges(g):
        raise HasBridge("graph has a bridge; every edge must lie on a cycle")

    n, m = g.num_vertices, g.num_edges
    edge_set = {frozenset(e) for e in g.edges}
    rng = random.Random(seed)
    hits = 0
    persistence_sum = 0.0
    for _ in range(trials):
        values = []
        seen = set()
        while len(values) < n:
            x = rng.random()
            if x not in seen:
                seen.add(x)
                values.append(x)
        vmax = max(range(n), key=lambda v: values[v])
        vmin = min(range(n), key=lambda v: values[v])
        if frozenset((vmin, vmax)) not in edge_set:
            continue
        hits += 1
        trial_graph = Graph(n, g.edges, values)
        bc = compute_extended_persistence(trial_graph, with_cycles=False)
        hit_bar = None
        for bar in bc.b1_ext:
            b, d = bar_base_values(bar, trial_graph)
            if b == values[vmax] and d == values[vmin]:
                hit_bar = (b, d)
                break
        if hit_bar is None:
            raise ExtphError(
                "maximal bar missing although the (argmin,argmax) edge exists"
            )
        persistence_sum += hit_bar[0] - hit_bar[1]

    return MonteCarloReport(
        trials=trials,
        hit_count=hits,
        empirical_probability=hits / trials,
        empirical_mean_persistence=(persistence_sum / hits) if hits else float("nan"),
        theoretical_probability=2.0 * m / (n * (n - 1)),
        theoretical_mean=(n - 1) / (n + 1),
    )

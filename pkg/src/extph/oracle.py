"""Brute-force extended persistence: GF(2) reduction of the coned filtration.

This is the correctness cross-check for the link-cut path, so apart from the
base lower filtration (shared on purpose, single source of edge values) it
reimplements everything: its own upper ordering, the coned complex, and a
textbook left-to-right column reduction on bit-packed columns.

The cone vertex enters first, then the lower filtration, then one cone
simplex per base simplex in upper order.  Pairs are classified by which
halves the two simplices fall in.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ExtphError
from .extended import Bar, ExtendedBarcode
from .graph import Graph, TieBreakPolicy, build_lower_filtration, require_distinct_values

__all__ = ["ConedFiltration", "build_coned_filtration", "reduce_and_pair", "oracle_barcode"]

OMEGA = ("omega",)


@dataclass
class ConedFiltration:
    simplices: list      # descriptors: ("omega",) ("v",i) ("e",j) ("cv",i) ("ce",j)
    boundaries: list     # per position: face positions
    values: list
    num_vertices: int
    num_edges: int
    low_eps: np.ndarray  # perturbed lower edge values (edge-indexed)
    up_eps: np.ndarray   # perturbed upper edge values
    low_base: np.ndarray
    up_base: np.ndarray


def _upper_order(g: Graph):
    """Vertices and edges in descending superlevel order, faces first.

    Derived directly from the definitions: vertices by value descending,
    edges keyed by (min,max) descending, an edge right after its min
    endpoint.  Independent of graph_model's implementation.
    """
    f = g.vertex_values
    entries = [(-f[v], 0, -f[v], ("v", v)) for v in range(g.num_vertices)]
    for j, (u, v) in enumerate(g.edges):
        lo, hi = min(f[u], f[v]), max(f[u], f[v])
        entries.append((-lo, 1, -hi, ("e", j)))
    entries.sort(key=lambda t: t[:3])
    return [t[3] for t in entries]


def build_coned_filtration(
    g: Graph, policy: TieBreakPolicy | None = None, variant: str = "interleaved"
) -> ConedFiltration:
    """Assemble the 2n+2m+1 simplices of the coned complex in order.

    variant="interleaved" places each cone simplex at its base simplex's
    upper-order position; variant="grouped" lists all vertex cones before all
    edge cones.  Both are valid linear extensions and must give equal
    barcodes (asserted in tests).
    """
    require_distinct_values(g)
    policy = policy or TieBreakPolicy()
    low = build_lower_filtration(g, policy)
    eps = low.epsilon
    f = g.vertex_values
    n, m = g.num_vertices, g.num_edges

    up_base = np.array([min(f[u], f[v]) for u, v in g.edges]) if m else np.empty(0)
    up_eps = np.array(
        [min(f[u], f[v]) + eps * max(f[u], f[v]) for u, v in g.edges]
    ) if m else np.empty(0)

    upper = _upper_order(g)
    if variant == "interleaved":
        cone_part = [("c" + kind, idx) for kind, idx in upper]
    elif variant == "grouped":
        cone_part = [("cv", idx) for kind, idx in upper if kind == "v"]
        cone_part += [("ce", idx) for kind, idx in upper if kind == "e"]
    else:
        raise ValueError(f"unknown variant {variant!r}")

    simplices = [OMEGA]
    simplices += [("v", int(i)) if i < n else ("e", int(i) - n) for i in low.order]
    simplices += cone_part

    pos = {s: p for p, s in enumerate(simplices)}
    boundaries = []
    values = []
    for s in simplices:
        kind = s[0]
        if kind == "omega":
            boundaries.append([])
            values.append(float(max(f) + 1.0) if n else 1.0)
        elif kind == "v":
            boundaries.append([])
            values.append(float(f[s[1]]))
        elif kind == "e":
            u, v = g.edges[s[1]]
            boundaries.append([pos[("v", u)], pos[("v", v)]])
            values.append(float(low.edge_values[s[1]]))
        elif kind == "cv":
            boundaries.append([pos[OMEGA], pos[("v", s[1])]])
            values.append(float(f[s[1]]))
        else:  # cone of an edge: triangle (omega, u, v)
            u, v = g.edges[s[1]]
            boundaries.append([pos[("e", s[1])], pos[("cv", u)], pos[("cv", v)]])
            values.append(float(up_eps[s[1]]))
    return ConedFiltration(
        simplices, boundaries, values, n, m,
        low_eps=low.edge_values, up_eps=up_eps,
        low_base=low.edge_base, up_base=up_base,
    )


def reduce_and_pair(cf: ConedFiltration) -> ExtendedBarcode:
    """Left-to-right GF(2) column reduction; classify pairs into four kinds."""
    ncols = len(cf.simplices)
    columns = [0] * ncols
    low_of = {}
    pairs = []
    for j in range(ncols):
        col = 0
        for r in cf.boundaries[j]:
            col ^= 1 << r
        while col:
            l = col.bit_length() - 1
            other = low_of.get(l)
            if other is None:
                break
            col ^= columns[other]
        columns[j] = col
        if col:
            l = col.bit_length() - 1
            low_of[l] = j
            pairs.append((l, j))

    paired = set()
    for l, j in pairs:
        paired.add(l)
        paired.add(j)
    unpaired = [p for p in range(ncols) if p not in paired]
    if unpaired != [0] or cf.simplices[0] != OMEGA:
        raise ExtphError(f"reduction left unexpected essential simplices: {unpaired}")

    f_of = {("v", i): i for i in range(cf.num_vertices)}
    bc = ExtendedBarcode()
    vals = cf.values
    for l, j in pairs:
        sb, sd = cf.simplices[l], cf.simplices[j]
        kb, kd = sb[0], sd[0]
        if kb == "v" and kd == "e":
            bc.b0_low.append(Bar(vals[l], float(cf.low_base[sd[1]]), sb[1], sd[1], "b0_low"))
        elif kb == "cv" and kd == "ce":
            bc.b0_up.append(Bar(vals[l], float(cf.up_base[sd[1]]), sb[1], sd[1], "b0_up"))
        elif kb == "v" and kd == "cv":
            bc.b0_ext.append(Bar(vals[l], vals[j], sb[1], sd[1], "b0_ext"))
        elif kb == "e" and kd == "ce":
            bc.b1_ext.append(Bar(float(cf.low_eps[sb[1]]), float(cf.up_eps[sd[1]]), sb[1], sd[1], "b1_ext"))
        else:
            raise ExtphError(f"unclassifiable pair {sb} -> {sd}")
    return bc


def oracle_barcode(
    g: Graph, policy: TieBreakPolicy | None = None, variant: str = "interleaved"
) -> ExtendedBarcode:
    return reduce_and_pair(build_coned_filtration(g, policy, variant))

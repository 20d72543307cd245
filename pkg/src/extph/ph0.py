"""0-dimensional persistence on one filtration via union-find.

Edges are scanned in exact filtration order.  An edge whose endpoints lie in
different components is negative: the younger component dies (elder rule) and
emits a bar with birth at the dying root's vertex value and death at the
edge's base value.  Same-component edges are positive.  Zero-persistence bars
are kept.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import FiltrationMismatch
from .graph import Graph, IndexFiltration

__all__ = ["UnionFindForest", "PhZeroResult", "ph0", "component_extrema"]


@dataclass
class UnionFindForest:
    """Union-find whose surviving root carries the extremal vertex of its set.

    For a lower filtration the extremal vertex is the minimum-valued one, for
    an upper filtration the maximum-valued one.  Merge comparisons fall back
    to the vertex index so behavior stays deterministic even on (invalid)
    tied values.
    """

    parent: list
    extreme: list          # per set root: extremal vertex index
    values: np.ndarray
    direction: str

    @classmethod
    def singletons(cls, values: np.ndarray, direction: str) -> "UnionFindForest":
        n = len(values)
        return cls(list(range(n)), list(range(n)), values, direction)

    def find(self, v: int) -> int:
        parent = self.parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:  # path compression
            parent[v], v = root, parent[v]
        return root

    def root_vertex(self, v: int) -> int:
        return self.extreme[self.find(v)]

    def root_value(self, v: int) -> float:
        return float(self.values[self.root_vertex(v)])

    def _older(self, a: int, b: int) -> bool:
        """True if extremal vertex a beats b for survival."""
        ka = (self.values[a], a)
        kb = (self.values[b], b)
        return ka < kb if self.direction == "lower" else ka > kb

    def union(self, ru: int, rv: int) -> int:
        """Merge two roots; returns the dying extremal vertex."""
        eu, ev = self.extreme[ru], self.extreme[rv]
        if self._older(eu, ev):
            survivor, dying = ru, rv
            dying_extreme = ev
        else:
            survivor, dying = rv, ru
            dying_extreme = eu
        self.parent[dying] = survivor
        return dying_extreme


@dataclass
class PhZeroResult:
    bars: list = field(default_factory=list)  # (birth, death, birth_vertex, death_edge)
    positive_edges: list = field(default_factory=list)
    negative_edges: list = field(default_factory=list)
    forest: UnionFindForest = None


def ph0(g: Graph, filt: IndexFiltration) -> PhZeroResult:
    """Algorithm: scan edges in filtration order, union components, emit bars."""
    n, m = g.num_vertices, g.num_edges
    if filt.num_vertices != n or len(filt.order) != n + m:
        raise FiltrationMismatch(
            f"filtration has {len(filt.order)} simplices over {filt.num_vertices} "
            f"vertices; graph has {n}+{m}"
        )
    forest = UnionFindForest.singletons(g.vertex_values, filt.direction)
    res = PhZeroResult(forest=forest)
    for e in filt.edge_scan_order():
        e = int(e)
        u, v = g.edges[e]
        ru, rv = forest.find(u), forest.find(v)
        if ru == rv:
            res.positive_edges.append(e)
            continue
        res.negative_edges.append(e)
        birth_vertex = forest.union(ru, rv)
        birth = float(g.vertex_values[birth_vertex])
        death = float(filt.edge_base[e])
        res.bars.append((birth, death, birth_vertex, e))
    return res


def component_extrema(forest_up: UnionFindForest, forest_low: UnionFindForest, g: Graph):
    """One (min,max) bar per connected component, with vertex provenance.

    The lower forest's root carries the component minimum and the upper
    forest's root the maximum; components are listed in order of their
    smallest vertex index.
    """
    bars = []
    seen = set()
    for v in range(g.num_vertices):
        root = forest_low.find(v)
        if root in seen:
            continue
        seen.add(root)
        bv = forest_low.root_vertex(v)
        dv = forest_up.root_vertex(v)
        bars.append(
            (float(g.vertex_values[bv]), float(g.vertex_values[dv]), bv, dv)
        )
    return bars

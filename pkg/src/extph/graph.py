"""Graph representation and lower/upper index filtrations.

A graph is a simple undirected graph with one real scalar per vertex.  The
induced edge values are max(f(u),f(v)) + eps*min(f(u),f(v)) in the lower
filtration and min(f(u),f(v)) + eps*max(f(u),f(v)) in the upper filtration;
eps is a tie-breaking perturbation that never crosses distinct base values.

The simplex *order* is computed, by default, from exact (max,min)
lexicographic keys rather than perturbed floats, so it is reproducible and
invariant under vertex relabeling whenever vertex values are distinct
(epsilon-formula mode swaps the perturbed float in as the secondary sort
key).  The perturbed values are materialized either way because cycle bars
are reported in those units.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import DuplicateVertexValues, InvalidEpsilon

__all__ = [
    "Graph",
    "TieBreakPolicy",
    "IndexFiltration",
    "ValidationReport",
    "validate_graph",
    "build_lower_filtration",
    "build_upper_filtration",
    "graph_to_json",
    "graph_from_json",
    "load_graph",
    "dump_graph",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with per-vertex scalar values."""

    num_vertices: int
    edges: tuple
    vertex_values: np.ndarray

    def __init__(self, num_vertices, edges, vertex_values):
        object.__setattr__(self, "num_vertices", int(num_vertices))
        object.__setattr__(
            self, "edges", tuple((int(u), int(v)) for u, v in edges)
        )
        object.__setattr__(
            self,
            "vertex_values",
            np.asarray(vertex_values, dtype=np.float64),
        )

    @property
    def num_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class TieBreakPolicy:
    """Edge tie-breaking: perturbation scale and ordering mode.

    epsilon=None resolves per graph to gap/(4*(n+m)) where gap is the minimum
    difference between distinct sorted vertex values.  mode picks how the
    simplex order is computed; both modes materialize the same perturbed
    values, 'lexicographic' (the default) orders by exact keys.
    """

    epsilon: float | None = None
    mode: str = "lexicographic"  # or "epsilon-formula"

    def __post_init__(self):
        if self.epsilon is not None and not self.epsilon > 0:
            raise InvalidEpsilon(f"epsilon must be positive, got {self.epsilon}")
        if self.mode not in ("lexicographic", "epsilon-formula"):
            raise InvalidEpsilon(f"unknown tie-break mode: {self.mode!r}")

    def resolve_epsilon(self, g: Graph) -> float:
        gap = _min_value_gap(g.vertex_values)
        if self.epsilon is not None:
            if self.mode == "epsilon-formula" and not self.epsilon < gap / 2:
                raise InvalidEpsilon(
                    f"epsilon {self.epsilon} not below half the minimum value gap {gap / 2}"
                )
            return self.epsilon
        denom = 4 * max(1, g.num_vertices + g.num_edges)
        return gap / denom


def _min_value_gap(values: np.ndarray) -> float:
    distinct = np.unique(values)
    if distinct.size < 2:
        return 1.0
    return float(np.diff(distinct).min())


@dataclass
class ValidationReport:
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    isolated_vertices: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.errors


def validate_graph(g: Graph) -> ValidationReport:
    """Report simple-graph violations and duplicate-value warnings.

    Isolated vertices are allowed and merely listed.
    """
    rep = ValidationReport()
    n = g.num_vertices
    if n < 0:
        rep.errors.append("negative vertex count")
    if len(g.vertex_values) != n:
        rep.errors.append(
            f"vertex_values length {len(g.vertex_values)} != num_vertices {n}"
        )
    seen = set()
    touched = [False] * max(n, 0)
    for idx, (u, v) in enumerate(g.edges):
        if u == v:
            rep.errors.append(f"edge {idx} is a self-loop ({u},{v})")
            continue
        if not (0 <= u < n and 0 <= v < n):
            rep.errors.append(f"edge {idx} endpoint out of range ({u},{v})")
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            rep.errors.append(f"duplicate edge {key}")
        seen.add(key)
        touched[u] = touched[v] = True
    if len(g.vertex_values) == n and n > 0:
        if np.unique(g.vertex_values).size != n:
            rep.warnings.append("duplicate vertex values (persistence requires distinct)")
        if not np.all(np.isfinite(g.vertex_values)):
            rep.errors.append("non-finite vertex value")
    rep.isolated_vertices = [v for v in range(n) if not touched[v]]
    return rep


def require_distinct_values(g: Graph) -> None:
    if np.unique(g.vertex_values).size != g.num_vertices:
        raise DuplicateVertexValues(
            "vertex values must be pairwise distinct for persistence computation"
        )


@dataclass
class IndexFiltration:
    """Total order on vertices and edges of one graph.

    order holds simplex ids: vertex i is id i, edge j is id n+j.  values are
    the materialized (perturbed, for edges) filtration values aligned with
    order.  edge_values/edge_base are indexed by edge id for direct lookup.
    """

    direction: str
    order: np.ndarray          # simplex ids, length n+m
    values: np.ndarray         # per position in order
    edge_values: np.ndarray    # perturbed value per edge index
    edge_base: np.ndarray      # unperturbed value per edge index
    epsilon: float
    num_vertices: int

    def edge_scan_order(self) -> np.ndarray:
        """Edge indices in filtration order."""
        ids = self.order[self.order >= self.num_vertices]
        return ids - self.num_vertices

    def simplex_value(self, simplex_id: int) -> float:
        pos = self._position(simplex_id)
        return float(self.values[pos])

    def _position(self, simplex_id: int):
        if not hasattr(self, "_pos"):
            lookup = np.empty(len(self.order), dtype=np.int64)
            lookup[self.order] = np.arange(len(self.order))
            self._pos = lookup
        return self._pos[simplex_id]


def _build_filtration(g: Graph, policy: TieBreakPolicy, direction: str) -> IndexFiltration:
    require_distinct_values(g)
    n, m = g.num_vertices, g.num_edges
    eps = policy.resolve_epsilon(g)
    f = g.vertex_values
    if m:
        eu = np.fromiter((e[0] for e in g.edges), dtype=np.int64, count=m)
        ev = np.fromiter((e[1] for e in g.edges), dtype=np.int64, count=m)
        fu, fv = f[eu], f[ev]
        # primary/secondary are (max,min) for lower and (min,max) for upper,
        # so the perturbed value is primary + eps*secondary either way
        if direction == "lower":
            k0, k1 = np.maximum(fu, fv), np.minimum(fu, fv)
        else:
            k0, k1 = np.minimum(fu, fv), np.maximum(fu, fv)
        edge_base = k0
        edge_pert = k0 + eps * k1
    else:
        k0 = k1 = edge_base = edge_pert = np.empty(0)

    # ascending sort by (signed primary, vertex-before-edge, signed secondary,
    # id); the primary stays the base value so faces always precede cofaces.
    # The secondary is exact in lexicographic mode and the perturbed float in
    # epsilon-formula mode (subject to float drift, as warned).
    sign = 1.0 if direction == "lower" else -1.0
    primary = np.concatenate((sign * f, sign * k0))
    tag = np.concatenate((np.zeros(n, dtype=np.int8), np.ones(m, dtype=np.int8)))
    second_edges = k1 if policy.mode == "lexicographic" else edge_pert
    secondary = np.concatenate((sign * f, sign * second_edges))
    ids = np.arange(n + m, dtype=np.int64)
    order = ids[np.lexsort((ids, secondary, tag, primary))]
    values = np.concatenate((f, edge_pert))[order]
    return IndexFiltration(
        direction=direction,
        order=order,
        values=values,
        edge_values=edge_pert,
        edge_base=edge_base,
        epsilon=eps,
        num_vertices=n,
    )


def build_lower_filtration(g: Graph, policy: TieBreakPolicy | None = None) -> IndexFiltration:
    """Ascending filtration: vertices at f(v), edges at max+eps*min."""
    return _build_filtration(g, policy or TieBreakPolicy(), "lower")


def build_upper_filtration(g: Graph, policy: TieBreakPolicy | None = None) -> IndexFiltration:
    """Descending filtration: vertices at f(v), edges at min+eps*max."""
    return _build_filtration(g, policy or TieBreakPolicy(), "upper")


# ---------------------------------------------------------------------------
# JSON interchange: the canonical graph format for the CLI and bindings.

def graph_to_json(g: Graph) -> str:
    payload = {
        "num_vertices": g.num_vertices,
        "edges": [[u, v] for u, v in g.edges],
        "vertex_values": [float(x) for x in g.vertex_values],
    }
    return json.dumps(payload)


def graph_from_json(text: str) -> Graph:
    payload = json.loads(text)
    return Graph(
        num_vertices=payload["num_vertices"],
        edges=payload["edges"],
        vertex_values=payload["vertex_values"],
    )


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json(fh.read())


def dump_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph_to_json(g))
        fh.write("\n")

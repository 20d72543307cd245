"""Extended persistence of a vertex-valued graph: four bar multisets plus
explicit cycle representatives, and a batch driver.

Bar value conventions (provenance makes them interconvertible):
  * b0_low / b0_up bars pair a vertex with an edge; birth is the vertex value
    and death the edge's base value (max resp. min endpoint value).
  * b0_ext bars pair each component's min vertex with its max vertex.
  * b1_ext bars pair two edges and are reported in perturbed units
    (F_low = max+eps*min of the birth edge, F_up = min+eps*max of the death
    edge); `bar_base_values` recovers the unperturbed endpoints.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import backend as _backend
from .errors import BatchItemError, ExtphError
from .graph import (
    Graph,
    TieBreakPolicy,
    build_lower_filtration,
    build_upper_filtration,
    validate_graph,
)

__all__ = [
    "Bar",
    "CycleRepresentative",
    "ExtendedBarcode",
    "compute_extended_persistence",
    "compute_batch",
    "cycle_scalars",
    "bar_base_values",
    "barcode_to_json",
    "barcode_from_json",
]

KINDS = ("b0_low", "b0_up", "b0_ext", "b1_ext")


@dataclass(frozen=True)
class Bar:
    birth: float
    death: float
    birth_simplex: int
    death_simplex: int
    kind: str


@dataclass(frozen=True)
class CycleRepresentative:
    """Vertex cycle witnessing one b1_ext bar: u .. lca .. v, closed by the
    positive edge (u,v)."""

    vertices: tuple
    closing_edge: tuple
    edge_index: int

    def __len__(self):
        return len(self.vertices)


@dataclass
class ExtendedBarcode:
    b0_low: list = field(default_factory=list)
    b0_up: list = field(default_factory=list)
    b0_ext: list = field(default_factory=list)
    b1_ext: list = field(default_factory=list)
    cycles: list = field(default_factory=list)

    def bars(self):
        return self.b0_low + self.b0_up + self.b0_ext + self.b1_ext

    def counts(self):
        return (len(self.b0_low), len(self.b0_up), len(self.b0_ext), len(self.b1_ext))

    def by_kind(self, kind: str):
        return getattr(self, kind)


def compute_extended_persistence(
    g: Graph,
    policy: TieBreakPolicy | None = None,
    with_cycles: bool = True,
    backend: str | None = None,
) -> ExtendedBarcode:
    """Run the four-pairing algorithm on one graph.

    Raises DuplicateVertexValues for tied vertex values and ExtphError for
    structurally invalid graphs.
    """
    report = validate_graph(g)
    if not report.valid:
        raise ExtphError("invalid graph: " + "; ".join(report.errors))
    policy = policy or TieBreakPolicy()
    low = build_lower_filtration(g, policy)
    up = build_upper_filtration(g, policy)

    n, m = g.num_vertices, g.num_edges
    f = g.vertex_values
    if m:
        eu = np.fromiter((e[0] for e in g.edges), dtype=np.int64, count=m)
        ev = np.fromiter((e[1] for e in g.edges), dtype=np.int64, count=m)
    else:
        eu = np.empty(0, dtype=np.int64)
        ev = np.empty(0, dtype=np.int64)
    kmax = low.edge_base                     # max endpoint value per edge
    kmin = np.minimum(f[eu], f[ev]) if m else np.empty(0)

    impl = _backend.get_impl(backend)
    b0l, b0u, ext, b1, cycles = impl.extended_pairs(
        n, eu, ev, f, low.edge_scan_order(), up.edge_scan_order(), kmax, kmin,
        bool(with_cycles),
    )

    bc = ExtendedBarcode()
    for bv, de in b0l:
        bc.b0_low.append(Bar(float(f[bv]), float(low.edge_base[de]), int(bv), int(de), "b0_low"))
    for bv, de in b0u:
        bc.b0_up.append(Bar(float(f[bv]), float(up.edge_base[de]), int(bv), int(de), "b0_up"))
    for va, vb in ext:
        bc.b0_ext.append(Bar(float(f[va]), float(f[vb]), int(va), int(vb), "b0_ext"))
    for be, de in b1:
        bc.b1_ext.append(
            Bar(float(low.edge_values[be]), float(up.edge_values[de]), int(be), int(de), "b1_ext")
        )
    if with_cycles:
        for rep, (_, de) in zip(cycles, b1):
            u, v = g.edges[de]
            bc.cycles.append(
                CycleRepresentative(tuple(int(x) for x in rep), (u, v), int(de))
            )
    return bc


def bar_base_values(bar: Bar, g: Graph):
    """Unperturbed (base) endpoints of a bar; identity except for b1_ext."""
    if bar.kind != "b1_ext":
        return bar.birth, bar.death
    f = g.vertex_values
    bu, bv = g.edges[bar.birth_simplex]
    du, dv = g.edges[bar.death_simplex]
    return float(max(f[bu], f[bv])), float(min(f[du], f[dv]))


def cycle_scalars(rep: CycleRepresentative, g: Graph) -> np.ndarray:
    """Vertex values along the representative, in cycle order."""
    return g.vertex_values[np.array(rep.vertices, dtype=np.int64)]


# ---------------------------------------------------------------------------
# batch driver: one graph per worker task, results positionally aligned

def _compute_one(args):
    index, g, policy, with_cycles, backend = args
    try:
        return index, compute_extended_persistence(g, policy, with_cycles, backend), None
    except Exception as exc:
        return index, None, exc


def compute_batch(
    gs,
    policy: TieBreakPolicy | None = None,
    with_cycles: bool = True,
    workers: int = 1,
    backend: str | None = None,
):
    gs = list(gs)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if not gs:
        return []
    jobs = [(i, g, policy, with_cycles, backend) for i, g in enumerate(gs)]
    if workers == 1 or len(gs) == 1:
        results = map(_compute_one, jobs)
    else:
        pool = ProcessPoolExecutor(max_workers=min(workers, len(gs)))
        try:
            results = list(pool.map(_compute_one, jobs, chunksize=max(1, len(gs) // (8 * workers))))
        finally:
            pool.shutdown()
    out = [None] * len(gs)
    for index, barcode, exc in results:
        if exc is not None:
            raise BatchItemError(index, exc) from exc
        out[index] = barcode
    return out


# ---------------------------------------------------------------------------
# JSON interchange (stable key order)

def barcode_to_obj(bc: ExtendedBarcode) -> dict:
    def enc(bars):
        return [[b.birth, b.death, b.birth_simplex, b.death_simplex] for b in bars]

    return {
        "b0_low": enc(bc.b0_low),
        "b0_up": enc(bc.b0_up),
        "b0_ext": enc(bc.b0_ext),
        "b1_ext": enc(bc.b1_ext),
        "cycles": [list(rep.vertices) for rep in bc.cycles],
    }


def barcode_to_json(bc: ExtendedBarcode) -> str:
    return json.dumps(barcode_to_obj(bc))


def barcode_from_json(text: str, g: Graph | None = None) -> ExtendedBarcode:
    obj = json.loads(text)
    bc = ExtendedBarcode()
    for kind in KINDS:
        dest = bc.by_kind(kind)
        for b, d, bs, ds in obj[kind]:
            dest.append(Bar(float(b), float(d), int(bs), int(ds), kind))
    for rep, bar in zip(obj.get("cycles", []), bc.b1_ext):
        closing = g.edges[bar.death_simplex] if g is not None else (rep[0], rep[-1])
        bc.cycles.append(
            CycleRepresentative(tuple(int(x) for x in rep), closing, bar.death_simplex)
        )
    return bc

"""Seeded generators for the synthetic benchmark families.

pinwheels: class 0 is two disjoint triangles, class 1 a single hexagon, each
core vertex decorated with k leaf vertices (leaves keep H1 untouched, so the
cycle count separates the classes).
two_cycles: two disjoint cycles totalling 100 vertices; class 0 pairs a short
cycle with a long one, class 1 two near-equal ones.
erdos_renyi: G(n,p) with seeded U(0,1) vertex values, re-drawn on collision.

All structure and values come from one random.Random(seed) stream, so a
DatasetSpec determines its files byte for byte.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from pathlib import Path

from .extended import ExtendedBarcode
from .graph import Graph, dump_graph

__all__ = [
    "DatasetSpec",
    "gen_pinwheels",
    "gen_two_cycles",
    "gen_erdos_renyi",
    "two_cycle_graph",
    "cycle_length_histogram",
    "write_dataset",
    "generate",
]


@dataclass(frozen=True)
class DatasetSpec:
    family: str                      # pinwheels | two_cycles | erdos_renyi
    count: int = 100
    seed: int = 0
    pinwheel_size_range: tuple = (1, 8)
    short_range: tuple = (3, 15)
    near_range: tuple = (45, 55)
    total_length: int = 100
    n: int = 100
    p: float = 0.1

    def __post_init__(self):
        if self.family not in ("pinwheels", "two_cycles", "erdos_renyi"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.count < 0:
            raise ValueError("count must be non-negative")


def _distinct_values(rng: random.Random, n: int):
    values = []
    seen = set()
    while len(values) < n:
        x = rng.random()
        if x not in seen:
            seen.add(x)
            values.append(x)
    return values


def _decorated_cycles(cycle_sizes, pin_size, rng):
    """Disjoint cycles with pin_size leaves hung on every core vertex."""
    edges = []
    base = 0
    cores = []
    for size in cycle_sizes:
        for i in range(size):
            edges.append((base + i, base + (i + 1) % size))
        cores.extend(range(base, base + size))
        base += size
    next_vertex = base
    for core in cores:
        for _ in range(pin_size):
            edges.append((core, next_vertex))
            next_vertex += 1
    return Graph(next_vertex, edges, _distinct_values(rng, next_vertex))


def gen_pinwheels(count: int, seed: int, pinwheel_size_range=(1, 8)):
    """Labeled graphs: label 0 = two pinwheeled triangles, 1 = pinwheeled hexagon."""
    lo, hi = pinwheel_size_range
    if hi < lo or lo < 0:
        raise ValueError("invalid pinwheel size range")
    rng = random.Random(seed)
    out = []
    for i in range(count):
        label = i % 2
        k = rng.randint(lo, hi)
        sizes = (3, 3) if label == 0 else (6,)
        out.append((_decorated_cycles(sizes, k, rng), label))
    return out


def two_cycle_graph(len_a: int, len_b: int, rng_or_seed=0) -> Graph:
    if min(len_a, len_b) < 3:
        raise ValueError("cycles need length >= 3")
    rng = rng_or_seed if isinstance(rng_or_seed, random.Random) else random.Random(rng_or_seed)
    edges = []
    for base, size in ((0, len_a), (len_a, len_b)):
        for i in range(size):
            edges.append((base + i, base + (i + 1) % size))
    return Graph(len_a + len_b, edges, _distinct_values(rng, len_a + len_b))


def gen_two_cycles(
    count: int, seed: int, short_range=(3, 15), near_range=(45, 55), total_length=100
):
    """Labeled graphs: 0 = short+long cycle pair, 1 = two near-equal cycles."""
    if total_length < 2 * 3:
        raise ValueError("total length too small for two cycles")
    rng = random.Random(seed)
    out = []
    for i in range(count):
        label = i % 2
        if label == 0:
            a = rng.randint(*short_range)
        else:
            a = rng.randint(*near_range)
        b = total_length - a
        out.append((two_cycle_graph(a, b, rng), label))
    return out


def gen_erdos_renyi(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0,1]")
    rng = random.Random(seed)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges, _distinct_values(rng, n))


def cycle_length_histogram(g: Graph, barcode: ExtendedBarcode) -> dict:
    """Representative length (vertex count, closing edge included) -> count."""
    hist = {}
    for rep in barcode.cycles:
        if any(not 0 <= v < g.num_vertices for v in rep.vertices):
            raise ValueError("cycle representative references unknown vertex")
        hist[len(rep)] = hist.get(len(rep), 0) + 1
    return dict(sorted(hist.items()))


def generate(spec: DatasetSpec):
    """Labeled graph list for a spec (erdos_renyi instances get label 0)."""
    if spec.family == "pinwheels":
        return gen_pinwheels(spec.count, spec.seed, spec.pinwheel_size_range)
    if spec.family == "two_cycles":
        return gen_two_cycles(
            spec.count, spec.seed, spec.short_range, spec.near_range, spec.total_length
        )
    return [
        (gen_erdos_renyi(spec.n, spec.p, spec.seed + i), 0) for i in range(spec.count)
    ]


def write_dataset(spec: DatasetSpec, outdir) -> list:
    """Write graph_%05d.json files plus labels.csv; returns the file list."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    items = generate(spec)
    paths = []
    for i, (g, _) in enumerate(items):
        path = outdir / f"graph_{i:05d}.json"
        dump_graph(g, path)
        paths.append(path)
    with open(outdir / "labels.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "label"])
        for i, (_, label) in enumerate(items):
            writer.writerow([i, label])
    return paths

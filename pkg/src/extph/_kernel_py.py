"""Pure-Python pairing kernel: union-find sweeps plus the link-cut loop.

Mirrors the compiled kernel's contract exactly; `extph.backend` picks one at
import time.  Inputs are precomputed in extph.extended (scan orders, lower
comparison keys), so the two kernels share every ordering convention and
return bit-identical pairings.
"""

from __future__ import annotations

from .lct import DynamicForest
from .ph0 import UnionFindForest

NAME = "python"


def _tree_argmax_first(forest: DynamicForest, root):
    """Leftmost max-key edge node in the exposed path rooted at `root`."""
    x = root
    target = root.agg
    while True:
        forest._push(x)
        if x.left is not None and x.left.agg == target:
            x = x.left
            continue
        if x.key == target:
            return x
        x = x.right


def extended_pairs(n, eu, ev, f, low_scan, up_scan, kmax, kmin, with_cycles):
    """Compute the four pairings and cycle representatives of one graph.

    Returns (b0l, b0u, ext, b1, cycles) where the first four are lists of
    index pairs (vertex/edge provenance, no values) and cycles is a list of
    vertex-id lists aligned with b1.
    """
    # 0-dimensional sweeps
    low = UnionFindForest.singletons(f, "lower")
    b0l = []
    for e in low_scan:
        e = int(e)
        ru, rv = low.find(eu[e]), low.find(ev[e])
        if ru != rv:
            b0l.append((low.union(ru, rv), e))

    up = UnionFindForest.singletons(f, "upper")
    b0u = []
    up_neg = []
    up_pos = []
    for e in up_scan:
        e = int(e)
        ru, rv = up.find(eu[e]), up.find(ev[e])
        if ru == rv:
            up_pos.append(e)
        else:
            up_neg.append(e)
            b0u.append((up.union(ru, rv), e))

    # one (min,max) pair per component, listed by smallest vertex index
    ext = []
    seen = set()
    for v in range(n):
        root = low.find(v)
        if root not in seen:
            seen.add(root)
            ext.append((low.extreme[root], up.extreme[up.find(v)]))

    # cycle pairing on the max spanning forest of upper-negative edges
    forest = DynamicForest(n)
    for e in up_neg:
        u, v = int(eu[e]), int(ev[e])
        forest._attach(
            forest._node(u), forest._node(v), (kmax[e], kmin[e]), e, evert=True
        )

    b1 = []
    cycles = []
    for e in up_pos:
        u, v = int(eu[e]), int(ev[e])
        nu, nv = forest._node(u), forest._node(v)
        forest._evert(nu)
        forest._access(nv)
        if with_cycles:
            path = forest._inorder(nv)
            cycles.append([x.index for x in path if not x.is_edge])
        enode = _tree_argmax_first(forest, nv)
        b1.append((enode.payload, e))
        forest._cut_edge_node(enode)
        # u kept its represented-root status through the cut, so the new
        # edge links without another evert
        forest._attach(nu, nv, (kmax[e], kmin[e]), e, evert=False)

    return b0l, b0u, ext, b1, cycles

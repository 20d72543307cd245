"""Splay-based link-cut forest with path max aggregation.

Vertices and tree edges are both splay nodes; an edge node sits between its
two endpoint vertices on the represented path and carries the edge's weight
key, so path edge-maxima are plain subtree aggregates and stay correct under
re-rooting.  Vertex nodes carry a -inf sentinel key.

Re-rooting (lazy reversal) is internal only: the public link/cut operations
keep their root/child preconditions, while the extended-persistence driver
uses the _evert/_attach/_cut_edge_node helpers where Algorithm-style
cut-then-relink forces a re-root.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import (
    DifferentTrees,
    InvalidLca,
    IsRoot,
    NotAncestor,
    NotARoot,
    SameTree,
    UnknownNode,
)

__all__ = ["DynamicForest", "TreeEdge", "NEG_INF_KEY"]

NEG_INF_KEY = (float("-inf"), float("-inf"))

# Internal node keys are 3-tuples whose last slot ranks edge nodes above
# vertex sentinels, so an argmax over a path never lands on a vertex even
# when every edge is unweighted.
_VERTEX_KEY = (float("-inf"), float("-inf"), 0)


class TreeEdge(NamedTuple):
    u: int        # child endpoint (deeper)
    v: int        # parent endpoint
    key: tuple
    payload: object


class _Node:
    __slots__ = (
        "left", "right", "parent", "rev",
        "key", "agg", "index", "eu", "ev", "payload",
    )

    def __init__(self, index, key=_VERTEX_KEY, eu=-1, ev=-1, payload=None):
        self.left = None
        self.right = None
        self.parent = None
        self.rev = False
        self.key = key
        self.agg = key
        self.index = index   # vertex id, or -1 for edge nodes
        self.eu = eu
        self.ev = ev
        self.payload = payload

    @property
    def is_edge(self):
        return self.index < 0


class DynamicForest:
    """Dynamic forest over vertices 0..n-1 with O(log n) amortized path ops."""

    def __init__(self, num_vertices: int):
        self._nodes = [_Node(i) for i in range(num_vertices)]
        self._edge_nodes = set()
        self.rotations = 0

    # -- node-level splay machinery ------------------------------------

    def _node(self, v: int) -> _Node:
        if not 0 <= v < len(self._nodes):
            raise UnknownNode(f"vertex {v} not in forest of {len(self._nodes)}")
        return self._nodes[v]

    @staticmethod
    def _is_aux_root(x: _Node) -> bool:
        p = x.parent
        return p is None or (p.left is not x and p.right is not x)

    @staticmethod
    def _push(x: _Node) -> None:
        if x.rev:
            x.rev = False
            x.left, x.right = x.right, x.left
            if x.left is not None:
                x.left.rev = not x.left.rev
            if x.right is not None:
                x.right.rev = not x.right.rev

    @staticmethod
    def _pull(x: _Node) -> None:
        agg = x.key
        l, r = x.left, x.right
        if l is not None and l.agg > agg:
            agg = l.agg
        if r is not None and r.agg > agg:
            agg = r.agg
        x.agg = agg

    def _rotate(self, x: _Node) -> None:
        p = x.parent
        g = p.parent
        if g is not None:
            if g.left is p:
                g.left = x
            elif g.right is p:
                g.right = x
            # otherwise p was an aux root: g keeps its path-parent role
        x.parent = g
        if p.left is x:
            p.left = x.right
            if x.right is not None:
                x.right.parent = p
            x.right = p
        else:
            p.right = x.left
            if x.left is not None:
                x.left.parent = p
            x.left = p
        p.parent = x
        self._pull(p)
        self._pull(x)
        self.rotations += 1

    def _splay(self, x: _Node) -> None:
        # push pending reversals top-down along the aux path first
        path = [x]
        w = x
        while not self._is_aux_root(w):
            w = w.parent
            path.append(w)
        for node in reversed(path):
            self._push(node)
        while not self._is_aux_root(x):
            p = x.parent
            if not self._is_aux_root(p):
                g = p.parent
                if (g.left is p) == (p.left is x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def _access(self, x: _Node) -> _Node:
        """Make the represented-root..x path preferred; x becomes its aux root.

        Returns the last path-parent followed (the LCA trick).
        """
        self._splay(x)
        if x.right is not None:
            x.right = None   # old deeper segment keeps x as path-parent
            self._pull(x)
        last = x
        while x.parent is not None:
            w = x.parent
            self._splay(w)
            w.right = x      # previous preferred child degrades to path-parent
            self._pull(w)
            self._splay(x)
            last = w
        return last

    def _evert(self, x: _Node) -> None:
        self._access(x)
        x.rev = not x.rev
        self._push(x)

    def _leftmost(self, x: _Node) -> _Node:
        self._push(x)
        while x.left is not None:
            x = x.left
            self._push(x)
        return x

    def _rightmost(self, x: _Node) -> _Node:
        self._push(x)
        while x.right is not None:
            x = x.right
            self._push(x)
        return x

    def _find_root_node(self, x: _Node) -> _Node:
        self._access(x)
        root = self._leftmost(x)
        self._splay(root)
        return root

    def _inorder(self, x: _Node):
        out = []
        stack = []
        while stack or x is not None:
            if x is not None:
                self._push(x)
                stack.append(x)
                x = x.left
            else:
                x = stack.pop()
                out.append(x)
                x = x.right
        return out

    def _rep_parent_node(self, x: _Node):
        """Represented parent vertex node of vertex node x (None at a root)."""
        self._access(x)
        if x.left is None:
            return None
        enode = self._rightmost(x.left)       # parent edge
        self._splay(enode)
        return self._rightmost(enode.left)    # parent vertex

    # -- public operations ----------------------------------------------

    def __len__(self):
        return len(self._nodes)

    def expose(self, v: int) -> None:
        """Make the path from v to its represented root preferred."""
        self._access(self._node(v))

    def find_root(self, v: int) -> int:
        return self._find_root_node(self._node(v)).index

    def represented_parent(self, v: int):
        p = self._rep_parent_node(self._node(v))
        return None if p is None else p.index

    def link(self, root_u: int, v: int, key: tuple = NEG_INF_KEY, payload=None) -> None:
        """Attach the tree rooted at root_u below v via a new edge."""
        ru, nv = self._node(root_u), self._node(v)
        if self._find_root_node(ru) is not ru:
            raise NotARoot(f"vertex {root_u} is not a represented root")
        if self._find_root_node(nv) is ru:
            raise SameTree(f"link({root_u},{v}) would close a cycle")
        self._attach(ru, nv, key, payload, evert=False)

    def cut(self, u: int) -> None:
        """Detach u from its represented parent."""
        x = self._node(u)
        self._access(x)
        if x.left is None:
            raise IsRoot(f"vertex {u} is a represented root")
        enode = self._rightmost(x.left)
        self._cut_edge_node(enode)

    def lca(self, u: int, v: int) -> int:
        nu, nv = self._node(u), self._node(v)
        if self._find_root_node(nu) is not self._find_root_node(nv):
            raise DifferentTrees(f"{u} and {v} are in different trees")
        self._access(nu)
        return self._access(nv).index

    def path_to(self, u: int, anc: int):
        """Vertices from u up to ancestor anc, inclusive."""
        nu, na = self._node(u), self._node(anc)
        if u == anc:
            return [u]
        if self.lca(u, anc) != anc:
            raise NotAncestor(f"{anc} is not an ancestor of {u}")
        self._access(nu)
        self._splay(na)
        below = self._inorder(na.right)
        return [x.index for x in reversed(below) if not x.is_edge] + [anc]

    def argmax_reduce_cycle(self, u: int, v: int, lca: int) -> TreeEdge:
        """Max-key tree edge on the path u..lca..v.

        Ties break toward the first occurrence in path order from u; with
        distinct edge keys (the persistence setting) they never fire.
        """
        if self.lca(u, v) != lca:
            raise InvalidLca(f"{lca} is not the lca of {u} and {v}")
        cu = self._segment_argmax(self._node(u), self._node(lca), prefer_deep=True)
        cv = self._segment_argmax(self._node(v), self._node(lca), prefer_deep=False)
        if cu is None and cv is None:
            raise InvalidLca(f"no tree edge on the path {u}..{v}")
        if cv is None or (cu is not None and cu.agg_key >= cv.agg_key):
            winner = cu.node
        else:
            winner = cv.node
        child, parent = self._orient(winner)
        return TreeEdge(
            child.index, parent.index, (winner.key[0], winner.key[1]), winner.payload
        )

    # -- internals shared with the persistence driver --------------------

    def _attach(self, nu: _Node, nv: _Node, key, payload, evert: bool) -> None:
        if evert:
            self._evert(nu)
        else:
            self._access(nu)
        ekey = (key[0], key[1], 1)
        enode = _Node(-1, key=ekey, eu=nu.index, ev=nv.index, payload=payload)
        self._edge_nodes.add(enode)
        nu.parent = enode
        enode.parent = nv

    def attach(self, u: int, v: int, key: tuple = NEG_INF_KEY, payload=None) -> None:
        """Driver link: re-roots u's tree at u, then hangs it below v."""
        nu, nv = self._node(u), self._node(v)
        if self._find_root_node(nu) is self._find_root_node(nv):
            raise SameTree(f"attach({u},{v}) would close a cycle")
        self._attach(nu, nv, key, payload, evert=True)

    def _cut_edge_node(self, enode: _Node) -> None:
        self._splay(enode)
        l, r = enode.left, enode.right
        # both sides exist: an edge node always has its two endpoints
        if l is not None:
            l.parent = None
            enode.left = None
        if r is not None:
            r.parent = None
            enode.right = None
        self._pull(enode)
        self._edge_nodes.discard(enode)

    class _SegMax(NamedTuple):
        node: object
        agg_key: tuple

    def _segment_argmax(self, desc: _Node, anc: _Node, prefer_deep: bool):
        """Best edge node strictly between anc and desc on the tree path."""
        if desc is anc:
            return None
        self._access(desc)
        self._splay(anc)
        sub = anc.right
        if sub is None:
            return None
        target = sub.agg
        x = sub
        while True:
            self._push(x)
            first, second = (x.right, x.left) if prefer_deep else (x.left, x.right)
            if first is not None and first.agg == target:
                x = first
                continue
            if x.key == target:
                return self._SegMax(x, target)
            x = second

    def _orient(self, enode: _Node):
        """Current (child, parent) vertex nodes of a live tree edge."""
        a = self._nodes[enode.eu]
        b = self._nodes[enode.ev]
        pa = self._rep_parent_node(a)
        if pa is b:
            return a, b
        return b, a

    # -- debug helpers ----------------------------------------------------

    def check_aggregates(self) -> bool:
        """Recompute every subtree max bottom-up and compare with stored aggs."""
        for x in list(self._nodes) + list(self._edge_nodes):
            agg = x.key
            if x.left is not None and x.left.agg > agg:
                agg = x.left.agg
            if x.right is not None and x.right.agg > agg:
                agg = x.right.agg
            if agg != x.agg:
                return False
        return True

    def parent_snapshot(self):
        """Represented parent per vertex (None at roots); for test oracles."""
        return [self.represented_parent(v) for v in range(len(self._nodes))]

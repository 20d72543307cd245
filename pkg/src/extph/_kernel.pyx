# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled pairing kernel: same contract as extph._kernel_py.

Vertices are nodes 0..n-1 and the tree edge for graph edge j is node n+j, so
an argmax node id maps straight back to its edge index.  All splay state
lives in flat arrays.
"""

import numpy as np

NAME = "native"

DEF NIL = -1


cdef class _Forest:
    cdef long long[::1] lc, rc, pa, scratch
    cdef unsigned char[::1] rev, w2, a2
    cdef double[::1] w0, w1, a0, a1
    cdef long long nn
    cdef public long long rotations

    def __cinit__(self, long long n, long long m):
        cdef long long nn = n + m
        self.nn = nn
        self.lc = np.full(nn, NIL, dtype=np.int64)
        self.rc = np.full(nn, NIL, dtype=np.int64)
        self.pa = np.full(nn, NIL, dtype=np.int64)
        self.rev = np.zeros(nn, dtype=np.uint8)
        ninf = float("-inf")
        self.w0 = np.full(nn, ninf, dtype=np.float64)
        self.w1 = np.full(nn, ninf, dtype=np.float64)
        self.w2 = np.zeros(nn, dtype=np.uint8)
        self.a0 = np.full(nn, ninf, dtype=np.float64)
        self.a1 = np.full(nn, ninf, dtype=np.float64)
        self.a2 = np.zeros(nn, dtype=np.uint8)
        self.scratch = np.zeros(nn + 1, dtype=np.int64)
        self.rotations = 0

    cdef inline bint _is_aux_root(self, long long x):
        cdef long long p = self.pa[x]
        return p == NIL or (self.lc[p] != x and self.rc[p] != x)

    cdef inline void _push(self, long long x):
        cdef long long t
        if self.rev[x]:
            self.rev[x] = 0
            t = self.lc[x]
            self.lc[x] = self.rc[x]
            self.rc[x] = t
            if self.lc[x] != NIL:
                self.rev[self.lc[x]] ^= 1
            if self.rc[x] != NIL:
                self.rev[self.rc[x]] ^= 1

    cdef inline void _pull(self, long long x):
        cdef double b0 = self.w0[x], b1 = self.w1[x]
        cdef unsigned char b2 = self.w2[x]
        cdef long long c = self.lc[x]
        if c != NIL and self._agg_gt(c, b0, b1, b2):
            b0 = self.a0[c]; b1 = self.a1[c]; b2 = self.a2[c]
        c = self.rc[x]
        if c != NIL and self._agg_gt(c, b0, b1, b2):
            b0 = self.a0[c]; b1 = self.a1[c]; b2 = self.a2[c]
        self.a0[x] = b0; self.a1[x] = b1; self.a2[x] = b2

    cdef inline bint _agg_gt(self, long long c, double b0, double b1, unsigned char b2):
        if self.a0[c] != b0:
            return self.a0[c] > b0
        if self.a1[c] != b1:
            return self.a1[c] > b1
        return self.a2[c] > b2

    cdef void _rotate(self, long long x):
        cdef long long p = self.pa[x]
        cdef long long g = self.pa[p]
        cdef long long sub
        if g != NIL:
            if self.lc[g] == p:
                self.lc[g] = x
            elif self.rc[g] == p:
                self.rc[g] = x
        self.pa[x] = g
        if self.lc[p] == x:
            sub = self.rc[x]
            self.lc[p] = sub
            if sub != NIL:
                self.pa[sub] = p
            self.rc[x] = p
        else:
            sub = self.lc[x]
            self.rc[p] = sub
            if sub != NIL:
                self.pa[sub] = p
            self.lc[x] = p
        self.pa[p] = x
        self._pull(p)
        self._pull(x)
        self.rotations += 1

    cdef void _splay(self, long long x):
        cdef long long top = 0, w = x, p, g
        self.scratch[top] = w; top += 1
        while not self._is_aux_root(w):
            w = self.pa[w]
            self.scratch[top] = w; top += 1
        while top > 0:
            top -= 1
            self._push(self.scratch[top])
        while not self._is_aux_root(x):
            p = self.pa[x]
            if not self._is_aux_root(p):
                g = self.pa[p]
                if (self.lc[g] == p) == (self.lc[p] == x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    cdef void _access(self, long long x):
        cdef long long w
        self._splay(x)
        if self.rc[x] != NIL:
            self.rc[x] = NIL
            self._pull(x)
        while self.pa[x] != NIL:
            w = self.pa[x]
            self._splay(w)
            self.rc[w] = x
            self._pull(w)
            self._splay(x)

    cdef void _evert(self, long long x):
        self._access(x)
        self.rev[x] ^= 1
        self._push(x)

    cdef void _init_edge_node(self, long long node, double key0, double key1):
        self.lc[node] = NIL
        self.rc[node] = NIL
        self.pa[node] = NIL
        self.rev[node] = 0
        self.w0[node] = key0; self.w1[node] = key1; self.w2[node] = 1
        self.a0[node] = key0; self.a1[node] = key1; self.a2[node] = 1

    cdef void _attach(self, long long u, long long enode, long long v, bint evert):
        # precondition: enode initialized; u and v in different trees
        if evert:
            self._evert(u)
        else:
            self._access(u)
        self.pa[u] = enode
        self.pa[enode] = v

    cdef long long _argmax_first(self, long long root):
        # leftmost node matching the root aggregate (must be an edge node)
        cdef double t0 = self.a0[root], t1 = self.a1[root]
        cdef unsigned char t2 = self.a2[root]
        cdef long long x = root, c
        while True:
            self._push(x)
            c = self.lc[x]
            if c != NIL and self.a0[c] == t0 and self.a1[c] == t1 and self.a2[c] == t2:
                x = c
                continue
            if self.w0[x] == t0 and self.w1[x] == t1 and self.w2[x] == t2:
                return x
            x = self.rc[x]

    cdef void _cut_edge(self, long long x):
        cdef long long l, r
        self._splay(x)
        l = self.lc[x]; r = self.rc[x]
        if l != NIL:
            self.pa[l] = NIL
            self.lc[x] = NIL
        if r != NIL:
            self.pa[r] = NIL
            self.rc[x] = NIL
        self._pull(x)

    cdef list _collect_vertices(self, long long root, long long n):
        cdef list out = []
        cdef long long top = 0, cur = root
        while top > 0 or cur != NIL:
            if cur != NIL:
                self._push(cur)
                self.scratch[top] = cur; top += 1
                cur = self.lc[cur]
            else:
                top -= 1
                cur = self.scratch[top]
                if cur < n:
                    out.append(cur)
                cur = self.rc[cur]
        return out


cdef inline long long _uf_find(long long[::1] parent, long long v):
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def extended_pairs(n, eu, ev, f, low_scan, up_scan, kmax, kmin, with_cycles):
    """Array-based twin of extph._kernel_py.extended_pairs."""
    if n == 0:
        return [], [], [], [], []
    cdef long long nn = n
    cdef long long[::1] ceu = np.ascontiguousarray(eu, dtype=np.int64)
    cdef long long[::1] cev = np.ascontiguousarray(ev, dtype=np.int64)
    cdef double[::1] cf = np.ascontiguousarray(f, dtype=np.float64)
    cdef long long[::1] clow = np.ascontiguousarray(low_scan, dtype=np.int64)
    cdef long long[::1] cup = np.ascontiguousarray(up_scan, dtype=np.int64)
    cdef double[::1] ckmax = np.ascontiguousarray(kmax, dtype=np.float64)
    cdef double[::1] ckmin = np.ascontiguousarray(kmin, dtype=np.float64)
    cdef long long m = ceu.shape[0]
    cdef bint cycles_on = with_cycles

    cdef long long[::1] parent = np.arange(nn, dtype=np.int64)
    cdef long long[::1] extreme = np.arange(nn, dtype=np.int64)
    cdef list b0l = [], b0u = [], ext = [], b1 = [], cycles = []
    cdef long long i, e, u, v, ru, rv, exu, exv, dying, surv, root

    # lower sweep: dying root has the larger (value, index)
    for i in range(clow.shape[0]):
        e = clow[i]
        ru = _uf_find(parent, ceu[e])
        rv = _uf_find(parent, cev[e])
        if ru == rv:
            continue
        exu = extreme[ru]; exv = extreme[rv]
        if cf[exu] > cf[exv] or (cf[exu] == cf[exv] and exu > exv):
            dying = ru; surv = rv
        else:
            dying = rv; surv = ru
        b0l.append((extreme[dying], e))
        parent[dying] = surv
    cdef long long[::1] low_parent = parent.copy()
    cdef long long[::1] low_extreme = extreme.copy()

    # upper sweep: dying root has the smaller (value, index)
    parent = np.arange(nn, dtype=np.int64)
    extreme = np.arange(nn, dtype=np.int64)
    cdef long long[::1] up_neg = np.empty(m, dtype=np.int64)
    cdef long long[::1] up_pos = np.empty(m, dtype=np.int64)
    cdef long long nneg = 0, npos = 0
    for i in range(cup.shape[0]):
        e = cup[i]
        ru = _uf_find(parent, ceu[e])
        rv = _uf_find(parent, cev[e])
        if ru == rv:
            up_pos[npos] = e; npos += 1
            continue
        up_neg[nneg] = e; nneg += 1
        exu = extreme[ru]; exv = extreme[rv]
        if cf[exu] < cf[exv] or (cf[exu] == cf[exv] and exu < exv):
            dying = ru; surv = rv
        else:
            dying = rv; surv = ru
        b0u.append((extreme[dying], e))
        parent[dying] = surv

    # component extrema, listed by smallest vertex index
    cdef unsigned char[::1] seen = np.zeros(max(nn, 1), dtype=np.uint8)
    for v in range(nn):
        root = _uf_find(low_parent, v)
        if not seen[root]:
            seen[root] = 1
            ext.append((low_extreme[root], extreme[_uf_find(parent, v)]))

    # cycle pairing over the max spanning forest of upper-negative edges
    cdef _Forest forest = _Forest(nn, m)
    for i in range(nneg):
        e = up_neg[i]
        forest._init_edge_node(nn + e, ckmax[e], ckmin[e])
        forest._attach(ceu[e], nn + e, cev[e], True)

    cdef long long x
    for i in range(npos):
        e = up_pos[i]
        u = ceu[e]; v = cev[e]
        forest._evert(u)
        forest._access(v)
        if cycles_on:
            cycles.append(forest._collect_vertices(v, nn))
        x = forest._argmax_first(v)
        b1.append((x - nn, e))
        forest._cut_edge(x)
        forest._init_edge_node(nn + e, ckmax[e], ckmin[e])
        forest._attach(u, nn + e, v, False)

    return b0l, b0u, ext, b1, cycles

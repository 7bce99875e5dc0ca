# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled counting kernels.

Inputs are the flat arrays of :class:`thyme.hypergraph.EdgeIndex`.  Every
sorted list (nodes of an edge, occurrences of a node-set, incidences of a
node) is addressed as a ``[ptr[x], ptr[x + 1])`` slice.  Sliding windows are
kept as ``[lo, hi)`` sub-slices of those lists, which is valid because
hyperedges enter and leave the window in index order.
"""
import numpy as np
from libc.limits cimport ULLONG_MAX

ctypedef long long i64
ctypedef int i32
ctypedef unsigned long long u64

cdef inline int code_from(i64 sa, i64 sb, i64 sc, i64 ab, i64 bc, i64 ca, i64 abc):
    cdef int code = 0
    if sa - ab - ca + abc > 0:
        code |= 1
    if sb - ab - bc + abc > 0:
        code |= 2
    if sc - bc - ca + abc > 0:
        code |= 4
    if ab > abc:
        code |= 8
    if bc > abc:
        code |= 16
    if ca > abc:
        code |= 32
    if abc > 0:
        code |= 64
    return code


cdef inline void intersect(const i32* x, i64 nx, const i32* y, i64 ny,
                           const i64* mark, i64 stamp, i64* both, i64* all3):
    """|x & y| and |x & y & marked| for sorted x, y."""
    cdef i64 p = 0, q = 0, c2 = 0, c3 = 0
    while p < nx and q < ny:
        if x[p] < y[q]:
            p += 1
        elif x[p] > y[q]:
            q += 1
        else:
            c2 += 1
            if mark[x[p]] == stamp:
                c3 += 1
            p += 1
            q += 1
    both[0] = c2
    all3[0] = c3


cdef inline void ordered_pairs(const i64* a, i64 na, const i64* b, i64 nb, u64* lt, u64* gt):
    """Pairs (s, t) in a x b with s < t and with s > t; inputs sorted, disjoint."""
    cdef i64 p, q = 0
    cdef u64 acc = 0
    for p in range(na):
        while q < nb and b[q] < a[p]:
            q += 1
        acc += nb - q
    lt[0] = acc
    gt[0] = <u64>na * <u64>nb - acc


cdef inline int add(u64* M, int m, u64 x) except -1:
    if M[m] > ULLONG_MAX - x:
        raise OverflowError("motif count exceeds 64 bits")
    M[m] += x
    return 0


cdef inline int motif(const i32* lookup, int code) except -1:
    cdef int m = lookup[code]
    if m <= 0:
        raise AssertionError("disconnected pattern reached a counter")
    return m


def thyme(idx, i64 delta, const i32[::1] lookup_mv, incident=None):
    """Enumerate every instance through the per-arrival projected graph P.

    When ``incident`` (int64, n_edges x 96) is given, each instance is also
    credited to its three members.
    """
    cdef i64 n = idx.n_edges
    M_arr = np.zeros(97, dtype=np.uint64)
    if n == 0:
        return M_arr, {"peak_nodes": 0, "peak_edges": 0}

    cdef const i64[::1] times = idx.times
    cdef const i64[::1] eptr = idx.edge_ptr
    cdef const i32[::1] enodes = idx.edge_nodes
    cdef const i64[::1] tptr = idx.node_tptr
    cdef const i32[::1] tinc = idx.node_tinc
    cdef i64 n_nodes = idx.n_nodes

    lo_arr = np.asarray(tptr[:n_nodes]).copy()
    hi_arr = lo_arr.copy()
    cdef i64[::1] lo = lo_arr
    cdef i64[::1] hi = hi_arr
    cdef i64[::1] nmark = np.full(n_nodes, -1, dtype=np.int64)
    cdef i64[::1] in_n = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] cnt_i = np.zeros(n, dtype=np.int64)
    cdef i64[::1] seen = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] cnt2 = np.zeros(n, dtype=np.int64)
    cdef i64[::1] nbr = np.empty(n, dtype=np.int64)
    cdef i64[::1] hop = np.empty(n, dtype=np.int64)
    cdef u64[::1] M = M_arr
    cdef u64* Mp = &M[0]
    cdef const i32* lookup = &lookup_mv[0]
    cdef const i32* en = &enodes[0]

    cdef bint attribute = incident is not None
    cdef i64[:, ::1] inc
    if attribute:
        inc = incident

    cdef i64 i, ws = 0, p, q, r, v, u, w, x, y, a, b, nn, nh, deg, scan = 0
    cdef i64 xy, xyi, ab, bc, ca
    cdef i64 ecount = 0, peak_nodes = 0, peak_edges = 0
    cdef int m

    for i in range(n):
        # insert e_i; its neighbours at insertion time give the new P edges
        nn = 0
        for p in range(eptr[i], eptr[i + 1]):
            v = en[p]
            for q in range(lo[v], hi[v]):
                u = tinc[q]
                if in_n[u] != i:
                    in_n[u] = i
                    cnt_i[u] = 1
                    nbr[nn] = u
                    nn += 1
                else:
                    cnt_i[u] += 1
            hi[v] += 1
        ecount += nn

        while times[ws] + delta < times[i]:
            scan += 1
            deg = 0
            for p in range(eptr[ws], eptr[ws + 1]):
                v = en[p]
                for q in range(lo[v], hi[v]):
                    u = tinc[q]
                    if u != ws and seen[u] != scan:
                        seen[u] = scan
                        deg += 1
            ecount -= deg
            for p in range(eptr[ws], eptr[ws + 1]):
                lo[en[p]] += 1
            ws += 1

        if i - ws + 1 > peak_nodes:
            peak_nodes = i - ws + 1
        if ecount > peak_edges:
            peak_edges = ecount

        # drop neighbours that just expired
        r = 0
        for a in range(nn):
            if nbr[a] >= ws:
                nbr[r] = nbr[a]
                r += 1
            else:
                in_n[nbr[a]] = -1
        nn = r
        for p in range(eptr[i], eptr[i + 1]):
            nmark[en[p]] = i

        # triples whose two older members both overlap e_i
        for a in range(nn):
            u = nbr[a]
            for b in range(a + 1, nn):
                v = nbr[b]
                if u < v:
                    x = u
                    y = v
                else:
                    x = v
                    y = u
                intersect(en + eptr[x], eptr[x + 1] - eptr[x], en + eptr[y], eptr[y + 1] - eptr[y],
                          &nmark[0], i, &xy, &xyi)
                m = motif(lookup, code_from(eptr[x + 1] - eptr[x], eptr[y + 1] - eptr[y],
                                            eptr[i + 1] - eptr[i], xy, cnt_i[y], cnt_i[x], xyi))
                Mp[m] += 1
                if attribute:
                    inc[x, m - 1] += 1
                    inc[y, m - 1] += 1
                    inc[i, m - 1] += 1

        # triples reached through a neighbour u; the far member w misses e_i
        for a in range(nn):
            u = nbr[a]
            scan += 1
            nh = 0
            for p in range(eptr[u], eptr[u + 1]):
                v = en[p]
                for q in range(lo[v], hi[v]):
                    w = tinc[q]
                    if w == i or w == u or in_n[w] == i:
                        continue
                    if seen[w] != scan:
                        seen[w] = scan
                        cnt2[w] = 1
                        hop[nh] = w
                        nh += 1
                    else:
                        cnt2[w] += 1
            for b in range(nh):
                w = hop[b]
                if u < w:
                    m = motif(lookup, code_from(eptr[u + 1] - eptr[u], eptr[w + 1] - eptr[w],
                                                eptr[i + 1] - eptr[i], cnt2[w], 0, cnt_i[u], 0))
                    x = u
                    y = w
                else:
                    m = motif(lookup, code_from(eptr[w + 1] - eptr[w], eptr[u + 1] - eptr[u],
                                                eptr[i + 1] - eptr[i], cnt2[w], cnt_i[u], 0, 0))
                    x = w
                    y = u
                Mp[m] += 1
                if attribute:
                    inc[x, m - 1] += 1
                    inc[y, m - 1] += 1
                    inc[i, m - 1] += 1

    return M_arr, {"peak_nodes": int(peak_nodes), "peak_edges": int(peak_edges)}


cdef inline i64 find_sorted(const i32* arr, i64 n, i64 v):
    cdef i64 lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    return lo


def thyme_plus(idx, i64 delta, const i32[::1] lookup_mv):
    """Count through the projected graph Q of distinct node-sets.

    ``[olo[s], ohi[s])`` is the window slice of the occurrence list of
    node-set ``s``; per hypergraph node, ``alist`` keeps the node-sets that
    are active in the window.
    """
    cdef i64 n = idx.n_edges
    M_arr = np.zeros(97, dtype=np.uint64)
    if n == 0:
        return M_arr, {"peak_nodes": 0, "peak_edges": 0}

    cdef const i64[::1] times = idx.times
    cdef const i32[::1] static_of = idx.static_of
    cdef const i64[::1] sptr = idx.static_ptr
    cdef const i32[::1] snodes = idx.static_nodes
    cdef const i64[::1] optr = idx.occ_ptr
    cdef const i64[::1] nsptr = idx.node_sptr
    cdef i64 n_nodes = idx.n_nodes
    cdef i64 n_static = idx.n_static

    occ_arr = np.ascontiguousarray(idx.occ, dtype=np.int64)
    cdef const i64[::1] occ = occ_arr
    olo_arr = np.asarray(optr[:n_static]).copy()
    ohi_arr = olo_arr.copy()
    cdef i64[::1] olo = olo_arr
    cdef i64[::1] ohi = ohi_arr
    cdef i64[::1] alist = np.empty(max(len(idx.node_sinc), 1), dtype=np.int64)
    cdef i64[::1] acnt = np.zeros(n_nodes, dtype=np.int64)
    cdef i64[::1] apos = np.empty(max(len(snodes), 1), dtype=np.int64)
    cdef i64[::1] nmark = np.full(n_nodes, -1, dtype=np.int64)
    cdef i64[::1] in_n = np.full(n_static, -1, dtype=np.int64)
    cdef i64[::1] cnt_i = np.zeros(n_static, dtype=np.int64)
    cdef i64[::1] seen = np.full(n_static, -1, dtype=np.int64)
    cdef i64[::1] cnt2 = np.zeros(n_static, dtype=np.int64)
    cdef i64[::1] nbr = np.empty(n_static, dtype=np.int64)
    cdef i64[::1] hop = np.empty(n_static, dtype=np.int64)
    cdef u64[::1] M = M_arr
    cdef u64* Mp = &M[0]
    cdef const i32* lookup = &lookup_mv[0]
    cdef const i32* sn = &snodes[0]
    cdef const i64* oc = &occ[0]

    cdef i64 i, ws = 0, s, t, j, k, p, q, v, u, base, last, pos, a, b, nn, nh, deg
    cdef i64 scan = 0, n_active = 0, ecount = 0, peak_nodes = 0, peak_edges = 0
    cdef i64 ss, sj, sk, jk, jks, na, nb
    cdef u64 lt, gt
    cdef int m

    for i in range(n):
        s = static_of[i]
        if ohi[s] == olo[s]:
            # new node of Q: count its edges, then register it at its nodes
            scan += 1
            deg = 0
            for p in range(sptr[s], sptr[s + 1]):
                v = sn[p]
                base = nsptr[v]
                for q in range(base, base + acnt[v]):
                    u = alist[q]
                    if seen[u] != scan:
                        seen[u] = scan
                        deg += 1
            ecount += deg
            for p in range(sptr[s], sptr[s + 1]):
                v = sn[p]
                alist[nsptr[v] + acnt[v]] = s
                apos[p] = acnt[v]
                acnt[v] += 1
            n_active += 1
        ohi[s] += 1

        while times[ws] + delta < times[i]:
            t = static_of[ws]
            olo[t] += 1
            if olo[t] == ohi[t]:
                scan += 1
                deg = 0
                for p in range(sptr[t], sptr[t + 1]):
                    v = sn[p]
                    base = nsptr[v]
                    for q in range(base, base + acnt[v]):
                        u = alist[q]
                        if u != t and seen[u] != scan:
                            seen[u] = scan
                            deg += 1
                ecount -= deg
                for p in range(sptr[t], sptr[t + 1]):
                    v = sn[p]
                    base = nsptr[v]
                    pos = apos[p]
                    last = alist[base + acnt[v] - 1]
                    alist[base + pos] = last
                    apos[sptr[last] + find_sorted(sn + sptr[last], sptr[last + 1] - sptr[last], v)] = pos
                    acnt[v] -= 1
                n_active -= 1
            ws += 1

        if n_active > peak_nodes:
            peak_nodes = n_active
        if ecount > peak_edges:
            peak_edges = ecount

        ss = sptr[s + 1] - sptr[s]
        nn = 0
        for p in range(sptr[s], sptr[s + 1]):
            v = sn[p]
            nmark[v] = i
            base = nsptr[v]
            for q in range(base, base + acnt[v]):
                u = alist[q]
                if u == s:
                    continue
                if in_n[u] != i:
                    in_n[u] = i
                    cnt_i[u] = 1
                    nbr[nn] = u
                    nn += 1
                else:
                    cnt_i[u] += 1

        # comb3 over triples of distinct node-sets, both others adjacent to s
        for a in range(nn):
            j = nbr[a]
            sj = sptr[j + 1] - sptr[j]
            for b in range(a + 1, nn):
                k = nbr[b]
                sk = sptr[k + 1] - sptr[k]
                intersect(sn + sptr[j], sj, sn + sptr[k], sk, &nmark[0], i, &jk, &jks)
                ordered_pairs(oc + olo[j], ohi[j] - olo[j], oc + olo[k], ohi[k] - olo[k], &lt, &gt)
                if lt:
                    add(Mp, motif(lookup, code_from(sj, sk, ss, jk, cnt_i[k], cnt_i[j], jks)), lt)
                if gt:
                    add(Mp, motif(lookup, code_from(sk, sj, ss, jk, cnt_i[j], cnt_i[k], jks)), gt)

        # comb3 over triples reached through j, where k misses s
        for a in range(nn):
            j = nbr[a]
            sj = sptr[j + 1] - sptr[j]
            scan += 1
            nh = 0
            for p in range(sptr[j], sptr[j + 1]):
                v = sn[p]
                base = nsptr[v]
                for q in range(base, base + acnt[v]):
                    k = alist[q]
                    if k == s or k == j or in_n[k] == i:
                        continue
                    if seen[k] != scan:
                        seen[k] = scan
                        cnt2[k] = 1
                        hop[nh] = k
                        nh += 1
                    else:
                        cnt2[k] += 1
            for b in range(nh):
                k = hop[b]
                sk = sptr[k + 1] - sptr[k]
                ordered_pairs(oc + olo[j], ohi[j] - olo[j], oc + olo[k], ohi[k] - olo[k], &lt, &gt)
                if lt:
                    add(Mp, motif(lookup, code_from(sj, sk, ss, cnt2[k], 0, cnt_i[j], 0)), lt)
                if gt:
                    add(Mp, motif(lookup, code_from(sk, sj, ss, cnt2[k], cnt_i[j], 0, 0)), gt)

        # comb2: one copy of s before e_i, or two copies of the neighbour
        na = ohi[s] - olo[s] - 1
        for a in range(nn):
            j = nbr[a]
            sj = sptr[j + 1] - sptr[j]
            nb = ohi[j] - olo[j]
            u = cnt_i[j]
            ordered_pairs(oc + olo[s], na, oc + olo[j], nb, &lt, &gt)
            if lt:
                add(Mp, motif(lookup, code_from(ss, sj, ss, u, u, ss, u)), lt)
            if gt:
                add(Mp, motif(lookup, code_from(sj, ss, ss, u, ss, u, u)), gt)
            if nb > 1:
                add(Mp, motif(lookup, code_from(sj, sj, ss, sj, u, u, u)), <u64>(nb * (nb - 1) // 2))

        # comb1
        if na > 1:
            add(Mp, motif(lookup, 64), <u64>(na * (na - 1) // 2))

    return M_arr, {"peak_nodes": int(peak_nodes), "peak_edges": int(peak_edges)}


cdef class _Window:
    """Sequence counts over at most three labels (the DP state)."""
    cdef i64 c1[3]
    cdef i64 c2[9]
    cdef i64 c3[27]
    cdef int n_labels

    cdef void reset(self, int n_labels):
        cdef int a
        self.n_labels = n_labels
        for a in range(3):
            self.c1[a] = 0
        for a in range(9):
            self.c2[a] = 0
        for a in range(27):
            self.c3[a] = 0

    cdef void push(self, int e):
        cdef int a, b, L = self.n_labels
        for a in range(L):
            for b in range(L):
                self.c3[a * 9 + b * 3 + e] += self.c2[a * 3 + b]
        for a in range(L):
            self.c2[a * 3 + e] += self.c1[a]
        self.c1[e] += 1

    cdef void pop(self, int e):
        cdef int b, L = self.n_labels
        self.c1[e] -= 1
        for b in range(L):
            self.c2[e * 3 + b] -= self.c1[b]


cdef int _merge(const i64* oc, const i64* optr, i64* group, int L, i64* seq, int* lab):
    """Merge the occurrence lists of up to three node-sets in time order."""
    cdef i64 pos[3]
    cdef i64 end[3]
    cdef int a, best, n = 0
    for a in range(L):
        pos[a] = optr[group[a]]
        end[a] = optr[group[a] + 1]
    while True:
        best = -1
        for a in range(L):
            if pos[a] < end[a] and (best < 0 or oc[pos[a]] < oc[pos[best]]):
                best = a
        if best < 0:
            return n
        seq[n] = oc[pos[best]]
        lab[n] = best
        pos[best] += 1
        n += 1


cdef int _scan(_Window W, const i64* times, i64* seq, int* lab, int n, i64 delta, int L):
    cdef int p, ws = 0
    W.reset(L)
    for p in range(n):
        while times[seq[ws]] + delta < times[seq[p]]:
            W.pop(lab[ws])
            ws += 1
        W.push(lab[p])
    return 0


def dp(idx, i64 delta, const i32[::1] lookup_mv, adj_ptr_arr, adj_arr):
    """Windowed sequence counting for every static triple, pair and single."""
    cdef i64 n_static = idx.n_static
    M_arr = np.zeros(97, dtype=np.uint64)
    if n_static == 0:
        return M_arr, {"static_triples": 0}

    cdef const i64[::1] times = idx.times
    cdef const i64[::1] sptr = idx.static_ptr
    cdef const i32[::1] snodes = idx.static_nodes
    cdef const i64[::1] optr = idx.occ_ptr
    occ_arr = np.ascontiguousarray(idx.occ, dtype=np.int64)
    cdef const i64[::1] occ = occ_arr
    cdef const i64[::1] aptr = adj_ptr_arr
    cdef const i32[::1] adj = np.ascontiguousarray(adj_arr, dtype=np.int32) if len(adj_arr) else np.zeros(1, dtype=np.int32)
    cdef i64 n_nodes = idx.n_nodes

    cdef i64 max_occ = int(np.max(np.diff(idx.occ_ptr)))
    seq_arr = np.empty(3 * max_occ, dtype=np.int64)
    lab_arr = np.empty(3 * max_occ, dtype=np.int32)
    cdef i64[::1] seq = seq_arr
    cdef int[::1] lab = lab_arr
    cdef i64[::1] nmark = np.full(n_nodes, -1, dtype=np.int64)
    cdef i64[::1] near = np.full(n_static, -1, dtype=np.int64)
    cdef i64[::1] cnt_x = np.zeros(n_static, dtype=np.int64)
    cdef i64[::1] lower = np.empty(n_static, dtype=np.int64)
    cdef u64[::1] M = M_arr
    cdef u64* Mp = &M[0]
    cdef const i32* lookup = &lookup_mv[0]
    cdef const i32* sn = &snodes[0]
    cdef const i64* oc = &occ[0]
    cdef const i64* tp = &times[0]

    cdef _Window W = _Window()
    cdef i64 group[3]
    cdef i64 sz[3]
    cdef i64 inter[9]
    cdef i64 x, u, v, p, q, a, b, nl, xu, xuv, uv, uvx, n_triples = 0
    cdef int n_seq, e0, e1, e2, L
    cdef i64 c

    for x in range(n_static):
        for p in range(sptr[x], sptr[x + 1]):
            nmark[sn[p]] = x
        nl = 0
        for p in range(aptr[x], aptr[x + 1]):
            u = adj[p]
            if u >= x:
                break
            near[u] = x
            intersect(sn + sptr[x], sptr[x + 1] - sptr[x], sn + sptr[u], sptr[u + 1] - sptr[u],
                      &nmark[0], x, &xu, &xuv)
            cnt_x[u] = xu
            lower[nl] = u
            nl += 1

        # static triples with x as the largest id
        for a in range(nl):
            u = lower[a]
            for b in range(a + 1, nl + (aptr[u + 1] - aptr[u])):
                if b < nl:
                    v = lower[b]
                else:
                    v = adj[aptr[u] + b - nl]
                    if v >= x or near[v] == x:
                        continue
                group[0] = x
                group[1] = u
                group[2] = v
                sz[0] = sptr[x + 1] - sptr[x]
                sz[1] = sptr[u + 1] - sptr[u]
                sz[2] = sptr[v + 1] - sptr[v]
                intersect(sn + sptr[u], sz[1], sn + sptr[v], sz[2], &nmark[0], x, &uv, &uvx)
                inter[0 * 3 + 1] = inter[1 * 3 + 0] = cnt_x[u]
                inter[1 * 3 + 2] = inter[2 * 3 + 1] = uv
                inter[2 * 3 + 0] = inter[0 * 3 + 2] = cnt_x[v] if near[v] == x else 0
                n_triples += 1
                n_seq = _merge(oc, &optr[0], group, 3, &seq[0], &lab[0])
                _scan(W, tp, &seq[0], &lab[0], n_seq, delta, 3)
                for e0 in range(3):
                    for e1 in range(3):
                        if e1 == e0:
                            continue
                        e2 = 3 - e0 - e1
                        c = W.c3[e0 * 9 + e1 * 3 + e2]
                        if c:
                            add(Mp, motif(lookup, code_from(sz[e0], sz[e1], sz[e2], inter[e0 * 3 + e1],
                                                            inter[e1 * 3 + e2], inter[e2 * 3 + e0], uvx)), <u64>c)

        # overlapping pairs (x, u) with u < x
        for a in range(nl):
            u = lower[a]
            group[0] = x
            group[1] = u
            sz[0] = sptr[x + 1] - sptr[x]
            sz[1] = sptr[u + 1] - sptr[u]
            xu = cnt_x[u]
            inter[0] = sz[0]
            inter[4] = sz[1]
            inter[1] = inter[3] = xu
            n_seq = _merge(oc, &optr[0], group, 2, &seq[0], &lab[0])
            _scan(W, tp, &seq[0], &lab[0], n_seq, delta, 2)
            for e0 in range(2):
                for e1 in range(2):
                    for e2 in range(2):
                        if e0 == e1 and e1 == e2:
                            continue
                        c = W.c3[e0 * 9 + e1 * 3 + e2]
                        if c:
                            add(Mp, motif(lookup, code_from(sz[e0], sz[e1], sz[e2], inter[e0 * 3 + e1],
                                                            inter[e1 * 3 + e2], inter[e2 * 3 + e0], xu)), <u64>c)

        group[0] = x
        n_seq = _merge(oc, &optr[0], group, 1, &seq[0], &lab[0])
        _scan(W, tp, &seq[0], &lab[0], n_seq, delta, 1)
        if W.c3[0]:
            add(Mp, motif(lookup, 64), <u64>W.c3[0])

    return M_arr, {"static_triples": int(n_triples)}


def static_classes(idx, const i32[::1] class_lut, adj_ptr_arr, adj_arr):
    """Per static edge, the number of connected static triples of each class (1..26)."""
    cdef i64 n_static = idx.n_static
    out_arr = np.zeros((n_static, 26), dtype=np.int64)
    if n_static == 0:
        return out_arr
    cdef i64[:, ::1] out = out_arr
    cdef const i64[::1] sptr = idx.static_ptr
    cdef const i32[::1] snodes = idx.static_nodes
    cdef const i64[::1] aptr = adj_ptr_arr
    cdef const i32[::1] adj = np.ascontiguousarray(adj_arr, dtype=np.int32) if len(adj_arr) else np.zeros(1, dtype=np.int32)
    cdef i64[::1] nmark = np.full(idx.n_nodes, -1, dtype=np.int64)
    cdef i64[::1] near = np.full(n_static, -1, dtype=np.int64)
    cdef i64[::1] cnt_x = np.zeros(n_static, dtype=np.int64)
    cdef i64[::1] lower = np.empty(n_static, dtype=np.int64)
    cdef const i32* sn = &snodes[0]
    cdef i64 x, u, v, p, a, b, nl, xu, xuv, uv, uvx, sx, su, sv
    cdef int cls

    for x in range(n_static):
        for p in range(sptr[x], sptr[x + 1]):
            nmark[sn[p]] = x
        nl = 0
        for p in range(aptr[x], aptr[x + 1]):
            u = adj[p]
            if u >= x:
                break
            near[u] = x
            intersect(sn + sptr[x], sptr[x + 1] - sptr[x], sn + sptr[u], sptr[u + 1] - sptr[u],
                      &nmark[0], x, &xu, &xuv)
            cnt_x[u] = xu
            lower[nl] = u
            nl += 1
        sx = sptr[x + 1] - sptr[x]
        for a in range(nl):
            u = lower[a]
            su = sptr[u + 1] - sptr[u]
            for b in range(a + 1, nl + (aptr[u + 1] - aptr[u])):
                if b < nl:
                    v = lower[b]
                else:
                    v = adj[aptr[u] + b - nl]
                    if v >= x or near[v] == x:
                        continue
                sv = sptr[v + 1] - sptr[v]
                intersect(sn + sptr[u], su, sn + sptr[v], sv, &nmark[0], x, &uv, &uvx)
                cls = class_lut[code_from(sx, su, sv, cnt_x[u], uv, cnt_x[v] if near[v] == x else 0, uvx)]
                if cls <= 0:
                    raise RuntimeError("connected static triple without a class")
                out[x, cls - 1] += 1
                out[u, cls - 1] += 1
                out[v, cls - 1] += 1
    return out_arr

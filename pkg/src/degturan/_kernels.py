"""Bitset kernels behind canonical labeling and pattern-free enumeration.

Graphs are passed as ``uint64`` arrays of adjacency rows (bit ``j`` of
``adj[i]`` set iff ``ij`` is an edge), so ``n <= 64``. Every function here is
written in the numba-compatible subset of Python and is compiled only when
``degturan._jit.JIT_ENABLED`` is true. All loops are iterative; numba
recursion is avoided on purpose.
"""

import numpy as np

from ._jit import njit

ZERO = np.uint64(0)
ONE = np.uint64(1)
M1 = np.uint64(0x5555555555555555)
M2 = np.uint64(0x3333333333333333)
M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
S1 = np.uint64(1)
S2 = np.uint64(2)
S4 = np.uint64(4)
S8 = np.uint64(8)
S16 = np.uint64(16)
S32 = np.uint64(32)
LOW7 = np.uint64(0x7F)

# pattern kinds understood by ``contains_kind`` / ``contains_through``
K_NONE = 0
K_CLIQUE = 1
K_PATH = 2
K_CYCLE = 3
K_EVEN_CYCLE = 4
K_BIPARTITE = 5
K_MATCHING = 6
K_STAR = 7
K_CUSTOM = 8


# ---------------------------------------------------------------------------
# bit helpers


@njit
def popcount(x):
    x = x - ((x >> S1) & M1)
    x = (x & M2) + ((x >> S2) & M2)
    x = (x + (x >> S4)) & M4
    x = x + (x >> S8)
    x = x + (x >> S16)
    x = x + (x >> S32)
    return np.int64(x & LOW7)


@njit
def bit(j):
    return ONE << np.uint64(j)


@njit
def lowbit(x):
    """Index of the lowest set bit; ``x`` must be nonzero."""
    return popcount((x & (~x + ONE)) - ONE)


@njit
def full_mask(n):
    if n >= 64:
        return ~ZERO
    return (ONE << np.uint64(n)) - ONE


@njit
def above(u):
    """Mask of all bit positions strictly greater than ``u``."""
    b = ONE << np.uint64(u)
    return ~(b | (b - ONE))


@njit
def degrees(adj, n):
    deg = np.empty(n, np.int64)
    for i in range(n):
        deg[i] = popcount(adj[i])
    return deg


@njit
def component_of(adj, n, v):
    reach = bit(v)
    frontier = reach
    while frontier != ZERO:
        nxt = ZERO
        f = frontier
        while f != ZERO:
            u = lowbit(f)
            f &= ~bit(u)
            nxt |= adj[u]
        nxt &= ~reach
        reach |= nxt
        frontier = nxt
    return reach


# ---------------------------------------------------------------------------
# canonical labeling
#
# Equitable partition refinement followed by a depth-first individualization
# tree. The canonical labeling is the leaf whose relabeled adjacency rows are
# lexicographically smallest. Automorphisms found at leaves prune siblings in
# the same orbit of the pointwise stabilizer of the current prefix, and a leaf
# equivalent to the first leaf sends the search back to the divergence level.

MAX_AUTOS = 256


@njit
def _refine(adj, n, lab, ptn, queue, inq, qlen, counts):
    head = 0
    while qlen > 0:
        w = queue[head]
        head += 1
        if head == n:
            head = 0
        qlen -= 1
        inq[w] = 0
        split_mask = ZERO
        i = w
        while True:
            split_mask |= bit(lab[i])
            if ptn[i] == 0:
                break
            i += 1
        s = 0
        while s < n:
            e = s
            while ptn[e] == 1:
                e += 1
            if e > s:
                c0 = popcount(adj[lab[s]] & split_mask)
                counts[s] = c0
                same = True
                for i in range(s + 1, e + 1):
                    c = popcount(adj[lab[i]] & split_mask)
                    counts[i] = c
                    if c != c0:
                        same = False
                if not same:
                    for i in range(s + 1, e + 1):
                        cv = counts[i]
                        lv = lab[i]
                        j = i - 1
                        while j >= s and counts[j] > cv:
                            counts[j + 1] = counts[j]
                            lab[j + 1] = lab[j]
                            j -= 1
                        counts[j + 1] = cv
                        lab[j + 1] = lv
                    fs = s
                    for i in range(s, e + 1):
                        if i == e or counts[i + 1] != counts[i]:
                            if i < e:
                                ptn[i] = 0
                            if inq[fs] == 0:
                                tail = head + qlen
                                if tail >= n:
                                    tail -= n
                                queue[tail] = fs
                                qlen += 1
                                inq[fs] = 1
                            fs = i + 1
            s = e + 1


@njit
def _leaf_code(adj, n, lab, inv, code):
    for i in range(n):
        inv[lab[i]] = i
    for i in range(n):
        row = adj[lab[i]]
        r = ZERO
        while row != ZERO:
            u = lowbit(row)
            row &= ~bit(u)
            r |= bit(inv[u])
        code[i] = r


@njit
def _cmp_code(a, b, n):
    for i in range(n):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


@njit
def _target_cell(ptn, n):
    s = 0
    while s < n:
        e = s
        while ptn[e] == 1:
            e += 1
        if e > s:
            return s, e
        s = e + 1
    return -1, -1


@njit
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit
def _pruned(cand, d, path, tried, ntried, autos, nauto, n, uf):
    """Is ``cand`` in the orbit of an already tried sibling at depth ``d``?"""
    for i in range(n):
        uf[i] = i
    useful = False
    for a in range(nauto):
        fixes = True
        for t in range(d):
            if autos[a, path[t]] != path[t]:
                fixes = False
                break
        if not fixes:
            continue
        useful = True
        for x in range(n):
            rx = _find(uf, x)
            ry = _find(uf, autos[a, x])
            if rx != ry:
                uf[rx] = ry
    if not useful:
        return False
    rc = _find(uf, cand)
    for t in range(ntried):
        if _find(uf, tried[t]) == rc:
            return True
    return False


@njit
def canon_label(adj, n):
    """Canonical labeling: ``lab[i]`` is the original vertex placed at ``i``."""
    lab = np.arange(n)
    if n <= 1:
        return lab
    ptn = np.ones(n, np.int64)
    ptn[n - 1] = 0
    queue = np.zeros(n, np.int64)
    inq = np.zeros(n, np.int64)
    counts = np.zeros(n, np.int64)
    queue[0] = 0
    inq[0] = 1
    _refine(adj, n, lab, ptn, queue, inq, 1, counts)
    ts, te = _target_cell(ptn, n)
    if ts < 0:
        return lab

    lab_st = np.empty((n + 1, n), np.int64)
    ptn_st = np.empty((n + 1, n), np.int64)
    tcs = np.empty(n + 1, np.int64)
    tce = np.empty(n + 1, np.int64)
    cidx = np.empty(n + 1, np.int64)
    tried = np.empty((n + 1, n), np.int64)
    ntried = np.zeros(n + 1, np.int64)
    path = np.empty(n + 1, np.int64)
    firstpath = np.empty(n + 1, np.int64)
    wl = np.empty(n, np.int64)
    wp = np.empty(n, np.int64)
    inv = np.empty(n, np.int64)
    code = np.empty(n, np.uint64)
    firstlab = np.empty(n, np.int64)
    firstcode = np.empty(n, np.uint64)
    bestlab = np.empty(n, np.int64)
    bestcode = np.empty(n, np.uint64)
    autos = np.empty((MAX_AUTOS, n), np.int64)
    nauto = 0
    uf = np.empty(n, np.int64)

    lab_st[0, :] = lab
    ptn_st[0, :] = ptn
    tcs[0] = ts
    tce[0] = te
    cidx[0] = ts
    ntried[0] = 0
    have_first = False
    d = 0
    while True:
        w = -1
        while cidx[d] <= tce[d]:
            cand = lab_st[d, cidx[d]]
            cidx[d] += 1
            if have_first and ntried[d] > 0:
                if _pruned(cand, d, path, tried[d], ntried[d], autos, nauto, n, uf):
                    continue
            w = cand
            break
        if w < 0:
            if d == 0:
                break
            d -= 1
            continue
        tried[d, ntried[d]] = w
        ntried[d] += 1
        path[d] = w

        s = tcs[d]
        e = tce[d]
        for i in range(n):
            wl[i] = lab_st[d, i]
            wp[i] = ptn_st[d, i]
        for i in range(s, e + 1):
            if wl[i] == w:
                wl[i] = wl[s]
                wl[s] = w
                break
        wp[s] = 0
        for i in range(n):
            inq[i] = 0
        queue[0] = s
        inq[s] = 1
        _refine(adj, n, wl, wp, queue, inq, 1, counts)
        ns, ne = _target_cell(wp, n)
        if ns < 0:
            _leaf_code(adj, n, wl, inv, code)
            if not have_first:
                have_first = True
                for i in range(n):
                    firstlab[i] = wl[i]
                    firstcode[i] = code[i]
                    bestlab[i] = wl[i]
                    bestcode[i] = code[i]
                for t in range(d + 1):
                    firstpath[t] = path[t]
                continue
            if _cmp_code(code, firstcode, n) == 0:
                if nauto < MAX_AUTOS:
                    for i in range(n):
                        autos[nauto, wl[i]] = firstlab[i]
                    nauto += 1
                lvl = 0
                while lvl < d and path[lvl] == firstpath[lvl]:
                    lvl += 1
                d = lvl
                continue
            c = _cmp_code(code, bestcode, n)
            if c < 0:
                for i in range(n):
                    bestlab[i] = wl[i]
                    bestcode[i] = code[i]
            elif c == 0 and nauto < MAX_AUTOS:
                for i in range(n):
                    autos[nauto, wl[i]] = bestlab[i]
                nauto += 1
            continue
        d += 1
        for i in range(n):
            lab_st[d, i] = wl[i]
            ptn_st[d, i] = wp[i]
        tcs[d] = ns
        tce[d] = ne
        cidx[d] = ns
        ntried[d] = 0
    return bestlab


@njit
def canon_rows(adj, n):
    """Adjacency rows of the canonical relabeling."""
    lab = canon_label(adj, n)
    inv = np.empty(n, np.int64)
    code = np.empty(n, np.uint64)
    _leaf_code(adj, n, lab, inv, code)
    return code


@njit
def pack_rows(rows, n, out, k):
    """Pack the upper triangle (column order) into ``out[k, 0:2]``; n <= 16."""
    lo = ZERO
    hi = ZERO
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (rows[i] >> np.uint64(j)) & ONE:
                if idx < 64:
                    lo |= ONE << np.uint64(idx)
                else:
                    hi |= ONE << np.uint64(idx - 64)
            idx += 1
    out[k, 0] = hi
    out[k, 1] = lo


@njit
def unpack_rows(hi, lo, n, rows):
    for i in range(n):
        rows[i] = ZERO
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if idx < 64:
                b = (lo >> np.uint64(idx)) & ONE
            else:
                b = (hi >> np.uint64(idx - 64)) & ONE
            if b:
                rows[i] |= bit(j)
                rows[j] |= bit(i)
            idx += 1


# ---------------------------------------------------------------------------
# detectors


@njit
def has_clique_in(adj, n, k, cand0):
    """Does the vertex set ``cand0`` contain a ``k``-clique?"""
    if k <= 0:
        return True
    size = n * (k + 1) + 2
    st_c = np.empty(size, np.uint64)
    st_r = np.empty(size, np.int64)
    sp = 0
    st_c[0] = cand0
    st_r[0] = k
    sp = 1
    while sp > 0:
        sp -= 1
        c = st_c[sp]
        r = st_r[sp]
        if popcount(c) < r:
            continue
        if r == 1:
            return True
        while c != ZERO:
            u = lowbit(c)
            c &= ~bit(u)
            nxt = c & adj[u]
            if popcount(nxt) >= r - 1:
                st_c[sp] = nxt
                st_r[sp] = r - 1
                sp += 1
    return False


@njit
def has_clique(adj, n, k):
    return has_clique_in(adj, n, k, full_mask(n))


@njit
def has_clique_through(adj, n, v, k):
    if k <= 1:
        return True
    return has_clique_in(adj, n, k - 1, adj[v])


@njit
def _reach_count(adj, start, blocked):
    reach = adj[start] & ~blocked
    frontier = reach
    while frontier != ZERO:
        nxt = ZERO
        f = frontier
        while f != ZERO:
            u = lowbit(f)
            f &= ~bit(u)
            nxt |= adj[u]
        nxt &= ~(blocked | reach)
        reach |= nxt
        frontier = nxt
    return popcount(reach)


@njit
def has_path_from(adj, n, k, starts):
    """Is there a simple path on ``k`` vertices starting in ``starts``?"""
    if k <= 1:
        return starts != ZERO
    path = np.empty(k, np.int64)
    rem = np.empty(k, np.uint64)
    sm = starts
    while sm != ZERO:
        s = lowbit(sm)
        sm &= ~bit(s)
        path[0] = s
        visited = bit(s)
        rem[0] = adj[s]
        d = 0
        while d >= 0:
            if rem[d] == ZERO:
                visited &= ~bit(path[d])
                d -= 1
                continue
            u = lowbit(rem[d])
            rem[d] &= ~bit(u)
            if d + 2 == k:
                return True
            need = k - d - 2
            if need >= 2 and _reach_count(adj, u, visited | bit(u)) < need:
                continue
            d += 1
            path[d] = u
            visited |= bit(u)
            rem[d] = adj[u] & ~visited
    return False


@njit
def has_path(adj, n, k):
    return has_path_from(adj, n, k, full_mask(n))


@njit
def has_path_through(adj, n, v, k):
    # any new P_k lies in the component of v
    return has_path_from(adj, n, k, component_of(adj, n, v))


@njit
def has_cycle_at(adj, n, k, s, allowed):
    """Is there a cycle of length ``k`` through ``s`` inside ``allowed | {s}``?"""
    if k < 3:
        return False
    path = np.empty(k, np.int64)
    rem = np.empty(k, np.uint64)
    path[0] = s
    visited = bit(s)
    rem[0] = adj[s] & allowed
    d = 0
    while d >= 0:
        if rem[d] == ZERO:
            visited &= ~bit(path[d])
            d -= 1
            continue
        u = lowbit(rem[d])
        rem[d] &= ~bit(u)
        if d + 2 == k:
            if (adj[u] >> np.uint64(s)) & ONE:
                return True
            continue
        d += 1
        path[d] = u
        visited |= bit(u)
        rem[d] = adj[u] & allowed & ~visited
    return False


@njit
def has_cycle(adj, n, k):
    for s in range(n):
        if has_cycle_at(adj, n, k, s, above(s) & full_mask(n)):
            return True
    return False


@njit
def has_even_cycle(adj, n):
    """Block decomposition: even-cycle-free iff every block is K2 or an odd cycle."""
    disc = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    parent = np.full(n, -1, np.int64)
    rem = np.zeros(n, np.uint64)
    st = np.empty(n, np.int64)
    nedge = n * n + 1
    eu = np.empty(nedge, np.int64)
    ev = np.empty(nedge, np.int64)
    esp = 0
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = clock
        low[root] = clock
        clock += 1
        rem[root] = adj[root]
        st[0] = root
        sp = 1
        while sp > 0:
            u = st[sp - 1]
            if rem[u] != ZERO:
                w = lowbit(rem[u])
                rem[u] &= ~bit(w)
                if disc[w] == -1:
                    eu[esp] = u
                    ev[esp] = w
                    esp += 1
                    parent[w] = u
                    disc[w] = clock
                    low[w] = clock
                    clock += 1
                    rem[w] = adj[w]
                    st[sp] = w
                    sp += 1
                elif w != parent[u] and disc[w] < disc[u]:
                    eu[esp] = u
                    ev[esp] = w
                    esp += 1
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            else:
                sp -= 1
                if sp > 0:
                    p = st[sp - 1]
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] >= disc[p]:
                        m = 0
                        vm = ZERO
                        while True:
                            esp -= 1
                            a = eu[esp]
                            b = ev[esp]
                            m += 1
                            vm |= bit(a) | bit(b)
                            if a == p and b == u:
                                break
                        nv = popcount(vm)
                        if not (m == 1 or (m == nv and nv % 2 == 1)):
                            return True
    return False


@njit
def has_bipartite(adj, n, a, b):
    """Is there an ``a``-set with at least ``b`` common neighbours?"""
    if a <= 0:
        return n >= b
    size = n * (a + 1) + 2
    st_cnt = np.empty(size, np.int64)
    st_last = np.empty(size, np.int64)
    st_int = np.empty(size, np.uint64)
    sp = 0
    for u in range(n):
        if popcount(adj[u]) >= b and n - u >= a:
            st_cnt[sp] = 1
            st_last[sp] = u
            st_int[sp] = adj[u]
            sp += 1
            while sp > 0:
                sp -= 1
                cnt = st_cnt[sp]
                last = st_last[sp]
                inter = st_int[sp]
                if popcount(inter) < b:
                    continue
                if cnt == a:
                    return True
                for w in range(last + 1, n - (a - cnt) + 1):
                    nxt = inter & adj[w]
                    if popcount(nxt) >= b:
                        st_cnt[sp] = cnt + 1
                        st_last[sp] = w
                        st_int[sp] = nxt
                        sp += 1
    return False


@njit
def matching_bb(adj, n, target):
    """Branch and bound for the maximum matching; stops early at ``target``."""
    size = n * (n + 2) + 2
    st_alive = np.empty(size, np.uint64)
    st_cnt = np.empty(size, np.int64)
    best = 0
    st_alive[0] = full_mask(n)
    st_cnt[0] = 0
    sp = 1
    while sp > 0:
        sp -= 1
        alive = st_alive[sp]
        cnt = st_cnt[sp]
        if cnt > best:
            best = cnt
            if best >= target:
                return best
        if cnt + popcount(alive) // 2 <= best:
            continue
        u = -1
        al = alive
        while al != ZERO:
            x = lowbit(al)
            al &= ~bit(x)
            if adj[x] & alive & ~bit(x):
                u = x
                break
            alive &= ~bit(x)
        if u < 0:
            continue
        if cnt + popcount(alive) // 2 <= best:
            continue
        rest = alive & ~bit(u)
        st_alive[sp] = rest
        st_cnt[sp] = cnt
        sp += 1
        nb = adj[u] & rest
        while nb != ZERO:
            w = lowbit(nb)
            nb &= ~bit(w)
            st_alive[sp] = rest & ~bit(w)
            st_cnt[sp] = cnt + 1
            sp += 1
    return best


@njit
def max_degree(adj, n):
    m = 0
    for i in range(n):
        d = popcount(adj[i])
        if d > m:
            m = d
    return m


@njit
def has_embedding(adj, n, padj, pn, order, pdeg, root):
    """Backtracking subgraph (not induced) embedding of the pattern.

    Pattern vertices are placed in ``order``; when ``root >= 0`` the first
    pattern vertex in ``order`` is pinned to host vertex ``root``.
    """
    if pn > n:
        return False
    hdeg = degrees(adj, n)
    allv = full_mask(n)
    degok = np.empty(pn, np.uint64)
    for q in range(pn):
        m = ZERO
        for x in range(n):
            if hdeg[x] >= pdeg[q]:
                m |= bit(x)
        degok[q] = m
    pos = np.empty(pn, np.int64)
    for i in range(pn):
        pos[order[i]] = i
    cand = np.zeros(pn, np.uint64)
    cur = np.full(pn, -1, np.int64)
    if root >= 0:
        cand[0] = bit(root) & degok[order[0]]
    else:
        cand[0] = degok[order[0]] & allv
    used = ZERO
    d = 0
    while d >= 0:
        if cur[d] >= 0:
            used &= ~bit(cur[d])
            cur[d] = -1
        if cand[d] == ZERO:
            d -= 1
            continue
        x = lowbit(cand[d])
        cand[d] &= ~bit(x)
        cur[d] = x
        used |= bit(x)
        if d == pn - 1:
            return True
        d += 1
        q = order[d]
        c = degok[q] & ~used
        pm = padj[q]
        while pm != ZERO and c != ZERO:
            t = lowbit(pm)
            pm &= ~bit(t)
            if pos[t] < d:
                c &= adj[cur[pos[t]]]
        cand[d] = c
        cur[d] = -1
    return False


@njit
def has_embedding_through(adj, n, padj, pn, orders, pdeg, v):
    dv = popcount(adj[v])
    for q in range(pn):
        if pdeg[q] > dv:
            continue
        if has_embedding(adj, n, padj, pn, orders[q], pdeg, v):
            return True
    return False


@njit
def contains_kind(adj, n, kind, ip, padj, pn, orders, pdeg):
    """Whole-graph containment test for a pattern kind."""
    if kind == K_NONE:
        return False
    if kind == K_CLIQUE:
        return has_clique(adj, n, ip[0])
    if kind == K_PATH:
        return has_path(adj, n, ip[0])
    if kind == K_CYCLE:
        return has_cycle(adj, n, ip[0])
    if kind == K_EVEN_CYCLE:
        return has_even_cycle(adj, n)
    if kind == K_BIPARTITE:
        return has_bipartite(adj, n, ip[0], ip[1])
    if kind == K_MATCHING:
        return matching_bb(adj, n, ip[0]) >= ip[0]
    if kind == K_STAR:
        return max_degree(adj, n) >= ip[0] - 1
    return has_embedding(adj, n, padj, pn, orders[pn], pdeg, -1)


@njit
def contains_through(adj, n, v, kind, ip, padj, pn, orders, pdeg):
    """Containment test assuming ``adj`` minus vertex ``v`` is pattern-free."""
    if kind == K_NONE:
        return False
    if kind == K_CLIQUE:
        return has_clique_through(adj, n, v, ip[0])
    if kind == K_PATH:
        return has_path_through(adj, n, v, ip[0])
    if kind == K_CYCLE:
        return has_cycle_at(adj, n, ip[0], v, full_mask(n) & ~bit(v))
    if kind == K_EVEN_CYCLE:
        return has_even_cycle(adj, n)
    if kind == K_BIPARTITE:
        return has_bipartite(adj, n, ip[0], ip[1])
    if kind == K_MATCHING:
        return matching_bb(adj, n, ip[0]) >= ip[0]
    if kind == K_STAR:
        lim = ip[0] - 1
        if popcount(adj[v]) >= lim:
            return True
        nb = adj[v]
        while nb != ZERO:
            u = lowbit(nb)
            nb &= ~bit(u)
            if popcount(adj[u]) >= lim:
                return True
        return False
    return has_embedding_through(adj, n, padj, pn, orders, pdeg, v)


# ---------------------------------------------------------------------------
# enumeration step


@njit
def extend_parents(codes, start, n, kind, ip, padj, pn, orders, pdeg, out):
    """Extend parents ``codes[start:]`` (graphs on ``n`` vertices) by one vertex.

    Every neighbour subset of the new vertex that keeps the graph pattern-free
    is emitted as the packed canonical code of the child. Containment only
    grows with the subset, so a failing subset is never extended. Stops when
    ``out`` could overflow; returns ``(next_parent, n_written, n_tested)``.
    """
    m = codes.shape[0]
    cap = out.shape[0]
    n1 = n + 1
    rows = np.zeros(n, np.uint64)
    child = np.zeros(n1, np.uint64)
    st_s = np.empty(n * n + n + 2, np.uint64)
    st_nx = np.empty(n * n + n + 2, np.int64)
    nout = 0
    tested = 0
    vb = bit(n)
    p = start
    while p < m:
        if cap - nout < (1 << n):
            break
        unpack_rows(codes[p, 0], codes[p, 1], n, rows)
        st_s[0] = ZERO
        st_nx[0] = 0
        sp = 1
        while sp > 0:
            sp -= 1
            s = st_s[sp]
            nx = st_nx[sp]
            for i in range(n):
                child[i] = rows[i]
                if (s >> np.uint64(i)) & ONE:
                    child[i] |= vb
            child[n] = s
            tested += 1
            if contains_through(child, n1, n, kind, ip, padj, pn, orders, pdeg):
                continue
            crow = canon_rows(child, n1)
            pack_rows(crow, n1, out, nout)
            nout += 1
            for j in range(n - 1, nx - 1, -1):
                st_s[sp] = s | bit(j)
                st_nx[sp] = j + 1
                sp += 1
        p += 1
    return p, nout, tested


@njit
def degree_histograms(codes, n):
    m = codes.shape[0]
    hist = np.zeros((m, n), np.int64)
    rows = np.zeros(n, np.uint64)
    for g in range(m):
        unpack_rows(codes[g, 0], codes[g, 1], n, rows)
        for i in range(n):
            hist[g, popcount(rows[i])] += 1
    return hist


@njit
def filter_free(codes, n, kind, ip, padj, pn, orders, pdeg):
    m = codes.shape[0]
    keep = np.zeros(m, np.bool_)
    rows = np.zeros(n, np.uint64)
    for g in range(m):
        unpack_rows(codes[g, 0], codes[g, 1], n, rows)
        keep[g] = not contains_kind(rows, n, kind, ip, padj, pn, orders, pdeg)
    return keep

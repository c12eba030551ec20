# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of `_pykernels`; same signatures, same search order.

Edge subsets are 64-bit masks, so graphs are limited to 64 edges (and
therefore 64 nodes for anything 2-edge-connected).
"""

ctypedef unsigned long long u64

DEF MAXN = 64
DEF MAXM = 64


cdef struct Graph:
    int n
    int m
    int eu[MAXM]
    int ev[MAXM]
    int cost[MAXM]


cdef bint _is_2ec(Graph* g, u64 mask) nogil:
    cdef int n = g.n
    cdef int deg[MAXN]
    cdef int nbr[MAXN][MAXM]
    cdef int nid[MAXN][MAXM]
    cdef int disc[MAXN]
    cdef int low[MAXN]
    cdef int st_x[MAXN]
    cdef int st_pe[MAXN]
    cdef int st_k[MAXN]
    cdef int i, x, y, eid, top, clock, p, a, b
    if n < 2:
        return False
    for i in range(n):
        deg[i] = 0
        disc[i] = -1
    for i in range(g.m):
        if (mask >> i) & 1:
            a = g.eu[i]
            b = g.ev[i]
            nbr[a][deg[a]] = b
            nid[a][deg[a]] = i
            deg[a] += 1
            nbr[b][deg[b]] = a
            nid[b][deg[b]] = i
            deg[b] += 1
    disc[0] = 0
    low[0] = 0
    clock = 1
    top = 0
    st_x[0] = 0
    st_pe[0] = -1
    st_k[0] = 0
    while top >= 0:
        x = st_x[top]
        if st_k[top] < deg[x]:
            y = nbr[x][st_k[top]]
            eid = nid[x][st_k[top]]
            st_k[top] += 1
            if eid == st_pe[top]:
                continue
            if disc[y] < 0:
                disc[y] = clock
                low[y] = clock
                clock += 1
                top += 1
                st_x[top] = y
                st_pe[top] = eid
                st_k[top] = 0
            elif disc[y] < low[x]:
                low[x] = disc[y]
            continue
        top -= 1
        if top >= 0:
            p = st_x[top]
            if low[x] > disc[p]:
                return False
            if low[x] < low[p]:
                low[p] = low[x]
    return clock == n


cdef int _find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef int _demand_bound(Graph* g, u64 inc) nogil:
    cdef int parent[MAXN]
    cdef int deg[MAXN]
    cdef int need[MAXN]
    cdef int i, a, b, ra, rb, r, ncomp, total
    for i in range(g.n):
        parent[i] = i
        deg[i] = 0
        need[i] = -1
    for i in range(g.m):
        if (inc >> i) & 1:
            a = g.eu[i]
            b = g.ev[i]
            deg[a] += 1
            deg[b] += 1
            ra = _find(parent, a)
            rb = _find(parent, b)
            if ra != rb:
                parent[ra] = rb
    ncomp = 0
    for i in range(g.n):
        r = _find(parent, i)
        if need[r] < 0:
            need[r] = 0
            ncomp += 1
        if deg[i] < 2:
            need[r] += 2 - deg[i]
    total = 0
    for i in range(g.n):
        if need[i] >= 0:
            if ncomp > 1 and need[i] < 2:
                total += 2
            else:
                total += need[i]
    return (total + 1) // 2


cdef struct OptState:
    int nunits
    int units[MAXM]
    int best
    u64 best_mask
    long long nodes
    int lower


cdef void _opt_rec(Graph* g, OptState* s, int k, u64 inc, u64 avail, int cur) nogil:
    cdef int extra
    cdef u64 bit
    s.nodes += 1
    extra = _demand_bound(g, inc)
    if cur + extra >= s.best:
        return
    if extra == 0 and _is_2ec(g, inc):
        s.best = cur
        s.best_mask = inc
        return
    if k == s.nunits:
        return
    bit = (<u64>1) << s.units[k]
    if _is_2ec(g, avail & ~bit):
        _opt_rec(g, s, k + 1, inc, avail & ~bit, cur)
        if s.best <= s.lower:
            return
    _opt_rec(g, s, k + 1, inc | bit, avail, cur + 1)


cdef int _load(Graph* g, int n, eu, ev, cost) except -1:
    cdef int i
    if len(eu) > MAXM or n > MAXN:
        raise ValueError("compiled kernel supports at most 64 edges")
    g.n = n
    g.m = len(eu)
    for i in range(g.m):
        g.eu[i] = eu[i]
        g.ev[i] = ev[i]
        g.cost[i] = cost[i] if cost is not None else 1
    return 0


def is_2ec_mask(int n, eu, ev, mask):
    cdef Graph g
    _load(&g, n, eu, ev, None)
    return bool(_is_2ec(&g, <u64>mask))


def opt_search(int n, eu, ev, cost, int lower=0):
    cdef Graph g
    cdef OptState s
    cdef u64 full, zmask
    cdef int i
    _load(&g, n, eu, ev, cost)
    if g.m == 64:
        full = <u64>0xFFFFFFFFFFFFFFFF
    else:
        full = ((<u64>1) << g.m) - 1
    if not _is_2ec(&g, full):
        return (-1, 0, 0)
    zmask = 0
    s.nunits = 0
    for i in range(g.m):
        if g.cost[i] == 0:
            zmask |= (<u64>1) << i
        else:
            s.units[s.nunits] = i
            s.nunits += 1
    s.best = s.nunits
    s.best_mask = full
    s.nodes = 0
    s.lower = lower
    with nogil:
        _opt_rec(&g, &s, 0, zmask, full, 0)
    return (s.best, int(s.best_mask), s.nodes)


cdef struct CoverState:
    int nunits
    int units[MAXM]
    int avail[MAXN]
    int inc[MAXN]
    int best
    u64 best_mask
    long long nodes


cdef void _cover_rec(Graph* g, CoverState* s, int k, u64 mask, int cur) nogil:
    cdef int need = 0
    cdef int v, i, a, b
    cdef bint useful
    s.nodes += 1
    for v in range(g.n):
        if s.inc[v] < 2:
            need += 2 - s.inc[v]
    if need == 0:
        if cur < s.best:
            s.best = cur
            s.best_mask = mask
        return
    if cur + (need + 1) // 2 >= s.best or k == s.nunits:
        return
    i = s.units[k]
    a = g.eu[i]
    b = g.ev[i]
    useful = s.inc[a] < 2 or s.inc[b] < 2
    if (s.avail[a] > 2 or s.inc[a] >= 2) and (s.avail[b] > 2 or s.inc[b] >= 2):
        s.avail[a] -= 1
        s.avail[b] -= 1
        _cover_rec(g, s, k + 1, mask, cur)
        s.avail[a] += 1
        s.avail[b] += 1
    if useful:
        s.inc[a] += 1
        s.inc[b] += 1
        _cover_rec(g, s, k + 1, mask | ((<u64>1) << i), cur + 1)
        s.inc[a] -= 1
        s.inc[b] -= 1


def cover_search(int n, eu, ev, cost):
    cdef Graph g
    cdef CoverState s
    cdef u64 zmask = 0
    cdef int i
    _load(&g, n, eu, ev, cost)
    if n == 0:
        return (-1, 0, 0)
    s.nunits = 0
    for i in range(n):
        s.avail[i] = 0
        s.inc[i] = 0
    for i in range(g.m):
        s.avail[g.eu[i]] += 1
        s.avail[g.ev[i]] += 1
        if g.cost[i] == 0:
            zmask |= (<u64>1) << i
            s.inc[g.eu[i]] += 1
            s.inc[g.ev[i]] += 1
        else:
            s.units[s.nunits] = i
            s.nunits += 1
    for i in range(n):
        if s.avail[i] < 2:
            return (-1, 0, 0)
    s.best = s.nunits + 1
    if g.m == 64:
        s.best_mask = <u64>0xFFFFFFFFFFFFFFFF
    else:
        s.best_mask = ((<u64>1) << g.m) - 1
    s.nodes = 0
    with nogil:
        _cover_rec(&g, &s, 0, zmask, 0)
    return (s.best, int(s.best_mask), s.nodes)

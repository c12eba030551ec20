"""Pure-Python exact search kernels.

Graphs are passed as parallel endpoint lists over nodes 0..n-1. Edge
subsets are int bitmasks. `_ckernels.pyx` mirrors this file line for
line; `kernels.py` picks whichever imports.
"""


def is_2ec_mask(n, eu, ev, mask):
    """Spanning subgraph given by `mask` is connected and bridgeless."""
    if n < 2:
        return False
    adj = [[] for _ in range(n)]
    i = 0
    mm = mask
    while mm:
        if mm & 1:
            adj[eu[i]].append((ev[i], i))
            adj[ev[i]].append((eu[i], i))
        mm >>= 1
        i += 1
    disc = [-1] * n
    low = [0] * n
    disc[0] = 0
    clock = 1
    stack = [(0, -1, 0)]
    while stack:
        x, pe, k = stack[-1]
        if k < len(adj[x]):
            stack[-1] = (x, pe, k + 1)
            y, eid = adj[x][k]
            if eid == pe:
                continue
            if disc[y] < 0:
                disc[y] = low[y] = clock
                clock += 1
                stack.append((y, eid, 0))
            elif disc[y] < low[x]:
                low[x] = disc[y]
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            if low[x] > disc[p]:
                return False
            if low[x] < low[p]:
                low[p] = low[x]
    return clock == n


def _demand_bound(n, eu, ev, inc):
    """Lower bound on the number of extra edges any 2-ECSS containing
    `inc` needs: each component must receive its degree deficit and, when
    there are several components, two crossing edges."""
    parent = list(range(n))
    deg = [0] * n

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    i = 0
    mm = inc
    while mm:
        if mm & 1:
            a, b = eu[i], ev[i]
            deg[a] += 1
            deg[b] += 1
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        mm >>= 1
        i += 1
    need = {}
    for v in range(n):
        r = find(v)
        need[r] = need.get(r, 0) + (2 - deg[v] if deg[v] < 2 else 0)
    total = 0
    if len(need) > 1:
        for d in need.values():
            total += d if d > 2 else 2
    else:
        for d in need.values():
            total += d
    return (total + 1) // 2


def opt_search(n, eu, ev, cost, lower=0):
    """Minimum number of unit-edges in a 2-ECSS; zero-edges always kept.

    Branches over unit-edges in the given order, exclusion first, pruning
    with the demand bound. Stops as soon as a solution meets `lower`.
    Returns (cost, mask, nodes explored); cost is -1 if infeasible.
    """
    m = len(eu)
    full = (1 << m) - 1
    if not is_2ec_mask(n, eu, ev, full):
        return (-1, 0, 0)
    zmask = 0
    units = []
    for i in range(m):
        if cost[i] == 0:
            zmask |= 1 << i
        else:
            units.append(i)
    best = [len(units), full, 0]

    def rec(k, inc, avail, cur):
        best[2] += 1
        extra = _demand_bound(n, eu, ev, inc)
        if cur + extra >= best[0]:
            return
        if extra == 0 and is_2ec_mask(n, eu, ev, inc):
            best[0], best[1] = cur, inc
            return
        if k == len(units):
            return
        bit = 1 << units[k]
        if is_2ec_mask(n, eu, ev, avail & ~bit):
            rec(k + 1, inc, avail & ~bit, cur)
            if best[0] <= lower:
                return
        rec(k + 1, inc | bit, avail, cur + 1)

    rec(0, zmask, full, 0)
    return (best[0], best[1], best[2])


def cover_search(n, eu, ev, cost):
    """Minimum number of unit-edges in a 2-edge cover; zero-edges kept.

    Returns (cost, mask, nodes explored); cost is -1 if some node has
    degree below two.
    """
    m = len(eu)
    avail = [0] * n
    inc = [0] * n
    zmask = 0
    units = []
    for i in range(m):
        avail[eu[i]] += 1
        avail[ev[i]] += 1
        if cost[i] == 0:
            zmask |= 1 << i
            inc[eu[i]] += 1
            inc[ev[i]] += 1
        else:
            units.append(i)
    if n == 0 or min(avail) < 2:
        return (-1, 0, 0)
    best = [len(units) + 1, (1 << m) - 1, 0]

    def rec(k, mask, cur):
        best[2] += 1
        need = 0
        for v in range(n):
            if inc[v] < 2:
                need += 2 - inc[v]
        if need == 0:
            if cur < best[0]:
                best[0], best[1] = cur, mask
            return
        if cur + (need + 1) // 2 >= best[0] or k == len(units):
            return
        i = units[k]
        a, b = eu[i], ev[i]
        useful = inc[a] < 2 or inc[b] < 2
        if (avail[a] > 2 or inc[a] >= 2) and (avail[b] > 2 or inc[b] >= 2):
            avail[a] -= 1
            avail[b] -= 1
            rec(k + 1, mask, cur)
            avail[a] += 1
            avail[b] += 1
        if useful:
            inc[a] += 1
            inc[b] += 1
            rec(k + 1, mask | (1 << i), cur + 1)
            inc[a] -= 1
            inc[b] -= 1

    rec(0, zmask, 0)
    return (best[0], best[1], best[2])

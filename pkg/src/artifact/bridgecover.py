"""Bridge covering: turn the post-processed cover into a bridgeless
2-edge cover by ear augmentations paid for out of the credit ledger.

Each iteration works inside one component C_0 of H with a root block R
and a bridge ru at R. An ear P leaves the r-side of C_0 - ru, avoids
C_0 internally, and lands at a0 on the u-side; Q is the stretch of C_0
from r to a0. Every non-H edge of P but the last is paid by the
component it enters; the last one, and the credit B^new needs, come
from Q and R (plus a sold edge and a second ear in one subcase).
"""

from collections import deque
from dataclasses import dataclass, field

from .errors import AuditFailure, ImpossibleCase, InternalError
from .ledger import POOL, CreditLedger, audit_credit_invariant, b_adjacent_blocks
from .multigraph import connectivity_profile, non_essential_check

INF_RANK = (1, 0, 0)


@dataclass
class EarPlan:
    nodes: list                  # a-end to z-end
    edges: list
    a0: int
    z0: int
    ru: int
    q_nodes: list = field(default_factory=list)
    q_edges: list = field(default_factory=list)
    gamma: tuple = INF_RANK
    tag: str = ""
    second: "EarPlan" = None
    buy: list = field(default_factory=list)
    sell: list = field(default_factory=list)

    def non_h(self, H):
        return [e for e in self.edges if e not in H]


@dataclass
class BridgeCoverResult:
    edges: frozenset
    ledger: CreditLedger
    log: list
    cover_edges: frozenset


def init_credits(g, cover_edges, audit=True):
    """H = the cover, with 4 retained and 3 working quarters per unit-edge."""
    H = set(cover_edges)
    ledger = CreditLedger(g, H)
    if audit:
        _audit(g, H, ledger, cover_edges, None, "init")
    return H, ledger


def _audit(g, H, ledger, cover_edges, root, phase):
    bad = audit_credit_invariant(g, H, ledger, cover_edges, root, phase)
    if bad:
        raise AuditFailure(phase, bad)


def _h_adj(g, H, nodes=None):
    adj = {}
    for eid in sorted(H):
        e = g.edge(eid)
        if nodes is not None and (e.u not in nodes or e.v not in nodes):
            continue
        adj.setdefault(e.u, []).append((e.v, eid))
        adj.setdefault(e.v, []).append((e.u, eid))
    return adj


def _reach(adj, start, banned_edges=(), banned_nodes=()):
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y, eid in adj.get(x, ()):
            if eid in banned_edges or y in banned_nodes or y in seen:
                continue
            seen.add(y)
            todo.append(y)
    return seen


def _bfs_path(adj, s, t, allowed):
    prev = {s: None}
    todo = deque([s])
    while todo:
        x = todo.popleft()
        if x == t:
            break
        for y, eid in adj.get(x, ()):
            if y in allowed and y not in prev:
                prev[y] = (x, eid)
                todo.append(y)
    if t not in prev:
        raise InternalError(f"no path {s}-{t} inside the component")
    nodes, edges = [t], []
    while prev[nodes[-1]] is not None:
        x, eid = prev[nodes[-1]]
        nodes.append(x)
        edges.append(eid)
    return nodes[::-1], edges[::-1]


def select_root(g, H, ledger, prof):
    """Root block, bridge ru and a record of any borrowed credit, for a
    fresh (original) component: the component with a bridge whose
    smallest node is smallest."""
    comps = sorted({prof.comp_of[g.edge(b).u] for b in prof.bridges},
                   key=lambda i: min(prof.components[i]))
    comp = prof.components[comps[0]]
    pend = []
    for b in prof.pendant_blocks(g):
        if b.key in comp:
            pend.append(b)
    if not pend:
        raise InternalError("component with a bridge has no pendant block")
    zero = [b for b in pend if g.edge(prof.block_bridges(b, g)[0]).cost == 0]
    R = min(zero or pend, key=lambda b: b.key)
    ru = prof.block_bridges(R, g)[0]
    record = {"root": R.key, "ru": ru, "borrowed": 0}
    c = ledger.credit(R.edges)
    if not zero and c < 8:
        short = 8 - c
        donors = sorted(b_adjacent_blocks(g, prof, R), key=lambda i: prof.blocks[i].key)
        for i in donors:
            d = prof.blocks[i]
            if ledger.credit(d.edges) - short >= 4:
                ledger.move(short, d.edges, R.edges, "root top-up")
                record.update(borrowed=short, donor=d.key)
                break
        else:
            raise InternalError("no b-adjacent block can top up the root")
    return R, ru, record


def choose_ru(g, prof, R):
    brs = prof.block_bridges(R, g)
    units = [b for b in brs if g.edge(b).cost == 1]
    return min(units) if units else min(brs)


def _sides(g, H, prof, ru, r):
    e = g.edge(ru)
    u = e.other(r)
    comp = prof.component_containing(r)
    adj = _h_adj(g, H, comp)
    side_r = _reach(adj, r, banned_edges={ru})
    return comp, side_r, frozenset(comp) - side_r, u, adj


def _gamma(g, prof, r, u, ru):
    """Finite ranks (0, cost, length) of black nodes reachable from r
    through ru along a b-path; every other u-side node ranks infinite.
    Also returns the b-path parents."""
    rank, prev = {}, {}
    if prof.is_white(u):
        return rank, prev
    rank[u] = (0, g.edge(ru).cost, 1)
    prev[u] = (r, ru)
    todo = deque([u])
    while todo:
        x = todo.popleft()
        for eid in prof.bridges_at.get(x, ()):
            y = g.edge(eid).other(x)
            if y == r or y in rank or prof.is_white(y):
                continue
            _z, c, n = rank[x]
            rank[y] = (0, c + g.edge(eid).cost, n + 1)
            prev[y] = (x, eid)
            todo.append(y)
    return rank, prev


def _zero_one_bfs(g, H, sources, arc):
    """0-1 BFS over arcs given by `arc(e) -> list of (tail, head)`.
    Returns dist and parent maps."""
    out = {}
    for e in g.edges:
        for a, b in arc(e):
            out.setdefault(a, []).append((b, 0 if e.id in H else 1, e.id))
    dist, prev = {}, {}
    dq = deque()
    for s in sorted(sources):
        dist[s] = 0
        prev[s] = None
        dq.append(s)
    done = set()
    while dq:
        x = dq.popleft()
        if x in done:
            continue
        done.add(x)
        for y, w, eid in out.get(x, ()):
            nd = dist[x] + w
            if y not in dist or nd < dist[y]:
                dist[y] = nd
                prev[y] = (x, eid)
                if w == 0:
                    dq.appendleft(y)
                else:
                    dq.append(y)
    return dist, prev


def _trace(prev, t):
    nodes, edges = [t], []
    while prev[nodes[-1]] is not None:
        x, eid = prev[nodes[-1]]
        nodes.append(x)
        edges.append(eid)
    return nodes, edges  # t back to its source


def find_ear(g, H, prof, R, ru, r):
    """Ear P, endpoints a0 and z0 and prefix Q for bridge ru at node r."""
    comp, side_r, side_u, u, adj = _sides(g, H, prof, ru, r)
    rank, bprev = _gamma(g, prof, r, u, ru)

    def where(x):
        return "r" if x in side_r else "u" if x in side_u else "o"

    def arc(e):
        if e.id == ru:
            return []
        a, b = where(e.u), where(e.v)
        if a == b == "o":
            return [(e.u, e.v), (e.v, e.u)]
        if a == "u" and b != "u":
            return [(e.v, e.u)] if b in "ro" else []
        if b == "u" and a != "u":
            return [(e.u, e.v)]
        if a == "r" and b == "o":
            return [(e.u, e.v)]
        if b == "r" and a == "o":
            return [(e.v, e.u)]
        return []

    dist, prev = _zero_one_bfs(g, H, side_r, arc)
    reached = [v for v in side_u if v in dist]
    if not reached:
        raise InternalError(f"no ear reaches the u-side of bridge {ru}")
    a0 = max(reached, key=lambda v: (rank.get(v, INF_RANK), -dist[v], -v))
    nodes, edges = _trace(prev, a0)
    plan = EarPlan(nodes, edges, a0, nodes[-1], ru, gamma=rank.get(a0, INF_RANK))
    if a0 in rank:
        qn, qe = [a0], []
        while qn[-1] != r:
            x, eid = bprev[qn[-1]]
            qn.append(x)
            qe.append(eid)
        plan.q_nodes, plan.q_edges = qn[::-1], qe[::-1]
    else:
        qn, qe = _bfs_path(adj, u, a0, side_u)
        plan.q_nodes, plan.q_edges = [r] + qn, [ru] + qe
    return plan


def classify_prefix(g, prof, q_nodes, q_edges):
    """Case tag for the prefix Q = r, v1, ..., a0.

    The pattern unit-bridge then zero-bridge with nothing else is
    impossible on a well-structured instance and raises."""
    if any(prof.is_white(x) for x in q_nodes[1:]):
        return "white-node"
    costs = [g.edge(e).cost for e in q_edges]
    if sum(costs) >= 2:
        return "cost>=2"
    if costs == [1, 0]:
        raise ImpossibleCase("case1", f"prefix bridges {q_edges}")
    if costs == [0, 1]:
        v2 = q_nodes[2]
        others = [b for b in prof.bridges_at.get(v2, ()) if b != q_edges[1]]
        if any(g.edge(b).cost == 1 for b in others):
            return "case3-unit"
        return "case3-double"
    if costs == [0, 1, 0]:
        return "case2"
    raise ImpossibleCase("prefix", f"bridge costs {costs}")


def find_second_ear(g, H, prof, comp, r, plan):
    """Second ear for the double subcase: from the R-side of C_0 - {v2,v3}
    to the far side, avoiding C_0 internally and both v2 and v3."""
    v1, v2 = plan.q_nodes[1], plan.q_nodes[2]
    others = [b for b in prof.bridges_at.get(v2, ()) if b != plan.q_edges[1]]
    if len(others) != 1 or g.edge(others[0]).cost != 0:
        raise InternalError("double subcase needs exactly one zero-bridge at v2")
    v3 = g.edge(others[0]).other(v2)
    adj = _h_adj(g, H, comp)
    S = _reach(adj, r, banned_nodes={v2, v3})
    T = frozenset(comp) - S - {v2, v3}
    if not T:
        raise InternalError("far side of {v2,v3} is empty")

    def where(x):
        return "s" if x in S else "t" if x in T else "x" if x in (v2, v3) else "o"

    def arc(e):
        a, b = where(e.u), where(e.v)
        if "x" in (a, b):
            return []
        if a == b == "o":
            return [(e.u, e.v), (e.v, e.u)]
        pairs = {("s", "o"), ("o", "t"), ("s", "t")}
        if (a, b) in pairs:
            return [(e.u, e.v)]
        if (b, a) in pairs:
            return [(e.v, e.u)]
        return []

    dist, prev = _zero_one_bfs(g, H, S, arc)
    reached = [v for v in T if v in dist]
    if not reached:
        raise InternalError("no second ear exists; {v2,v3} would be a bad pair")
    a_star = min(reached, key=lambda v: (dist[v], v))
    nodes, edges = _trace(prev, a_star)
    second = EarPlan(nodes, edges, a_star, nodes[-1], plan.ru)
    qn, qe = _bfs_path(adj, v1, a_star, frozenset(comp))
    second.q_nodes, second.q_edges = qn, qe
    second.tag = "second"
    return second, v3


def _bwalk(g, prof, start, banned, via=None):
    """White terminals of maximal b-paths from `start`, each with the
    first bridge used. Stops at white nodes. `via` restricts the first
    bridge."""
    first = {}
    seen = {start}
    todo = deque()
    for eid in prof.bridges_at.get(start, ()):
        if eid in banned or (via is not None and eid != via):
            continue
        y = g.edge(eid).other(start)
        if y not in seen:
            seen.add(y)
            todo.append((y, eid))
    while todo:
        x, f = todo.popleft()
        if prof.is_white(x):
            first.setdefault(x, f)
            continue
        for eid in prof.bridges_at.get(x, ()):
            y = g.edge(eid).other(x)
            if eid in banned or y in seen:
                continue
            seen.add(y)
            todo.append((y, f))
    return first


def _incident_h(g, H, nodes):
    return [i for i in sorted(H) if g.edge(i).u in nodes or g.edge(i).v in nodes]


def ear_payments(g, H, prof, plan):
    """Payment plan for every non-H edge of the ear except the last.

    Returns (payments, last edge id, touched component indices). A
    payment is (edge id, [(quarters, source edge ids)], note)."""
    nodes, edges = plan.nodes, plan.edges
    pos = [j for j, eid in enumerate(edges) if eid not in H]
    if not pos:
        raise InternalError("ear contains no new edge")
    pays, seen = [], set()
    for k, j in enumerate(pos[:-1]):
        f = edges[j]
        jn = pos[k + 1]
        sub_nodes = nodes[j + 1:jn + 1]
        sub_edges = set(edges[j + 1:jn])
        s0, t0 = sub_nodes[0], sub_nodes[-1]
        ci = prof.comp_of[s0]
        if any(prof.comp_of[x] != ci for x in sub_nodes):
            raise InternalError("ear leaves a component along H-edges")
        if ci in seen:
            raise InternalError("ear enters a component twice")
        seen.add(ci)
        comp = prof.components[ci]
        whites = [x for x in sub_nodes if prof.is_white(x)]
        if whites:
            B = prof.block_containing(whites[0])
            pays.append((f, [(4, B.edges)], f"block {B.key}"))
            continue
        via_s = via_t = None
        if s0 == t0:
            # a black node on its own: walk out along its two smallest bridges
            free = [b for b in prof.bridges_at.get(s0, ()) if b not in sub_edges]
            if len(free) < 2:
                raise InternalError(f"black node {s0} has fewer than two bridges")
            via_s, via_t = free[0], free[1]
        bs = _bwalk(g, prof, s0, sub_edges, via_s)
        if not bs:
            raise InternalError(f"no b-path from {s0}")
        s1 = min(bs)
        bt = _bwalk(g, prof, t0, sub_edges, via_t)
        Bs = prof.block_containing(s1)
        bt = {x: v for x, v in bt.items() if prof.block_of[x] != prof.block_of[s1]}
        if not bt:
            raise InternalError(f"no second donor block in component at {min(comp)}")
        t1 = min(bt)
        Bt = prof.block_containing(t1)
        pays.append((f, [(2, Bs.edges), (2, Bt.edges)], f"donors {Bs.key},{Bt.key}"))
    for x in nodes[1:-1]:
        seen.add(prof.comp_of[x])
    return pays, edges[pos[-1]], seen


def _prefix_sources(g, prof, R, nodes, edges, skip_edges=()):
    """Credit sources along a prefix: its unit-bridges, then the blocks on
    it other than R, in order."""
    srcs = [[e] for e in edges if e not in skip_edges and g.edge(e).cost == 1 and e in prof.bridges]
    seen = {prof.block_of.get(next(iter(R.nodes)))}
    for x in nodes:
        bi = prof.block_of.get(x)
        if bi is not None and bi not in seen:
            seen.add(bi)
            srcs.append(prof.blocks[bi].edges)
    return srcs


def apply_ear(g, H, ledger, prof, R, plan, second=None):
    """Buy the ear(s), sell planned edges, pay per the charging rules.
    Mutates H and the ledger; returns an iteration record."""
    rec = {"tag": plan.tag, "ru": plan.ru, "a0": plan.a0, "z0": plan.z0,
           "q": list(plan.q_edges), "bought": [], "sold": [], "payments": []}
    ears = [plan] + ([second] if second is not None else [])
    new_edges = []
    for ear in ears:
        new_edges += [e for e in ear.non_h(H) if e not in new_edges]
    H2 = set(H) | set(new_edges)
    for eid in plan.sell:
        if not non_essential_check(g, eid, H2):
            raise InternalError(f"edge {eid} is essential and cannot be sold")
        H2.discard(eid)
        ledger.sell(eid)
        rec["sold"].append(eid)
    lasts = []
    touched = []
    for ear in ears:
        pays, last, comps = ear_payments(g, H, prof, ear)
        touched.append(comps)
        for eid, parts, note in pays:
            for amount, src in parts:
                ledger.take(amount, [src], f"ear edge {eid} ({note})")
            ledger.retained[eid] = 4
            ledger.working[eid] = 0
            ledger.spent += 4
            rec["bought"].append(eid)
            rec["payments"].append((eid, note))
        lasts.append(last)
    if second is not None:
        if touched[0] & touched[1]:
            raise InternalError("a component of H - C_0 touches both ears")
    srcs = [POOL]
    if second is not None:
        qset = set(plan.q_edges)
        extra = [e for e in second.q_edges if e not in qset]
        xnodes = [x for x in second.q_nodes if x not in set(plan.q_nodes)]
        srcs += _prefix_sources(g, prof, R, xnodes, extra, skip_edges=plan.sell)
    srcs += _prefix_sources(g, prof, R, plan.q_nodes[1:], plan.q_edges, skip_edges=plan.sell)
    srcs.append(R.edges)
    for last in lasts:
        ledger.buy(last, srcs, f"closing edge {last}")
        rec["bought"].append(last)
        rec["payments"].append((last, "prefix and root"))
    H.clear()
    H.update(H2)
    return rec


def cover_bridges(g, cover_edges, audit=True, max_iter=None):
    """Run bridge covering from the post-processed cover. Returns the
    bridgeless 2-edge cover, the ledger and the iteration log."""
    cover_edges = frozenset(cover_edges)
    H, ledger = init_credits(g, cover_edges, audit)
    log = []
    root = None
    fresh = False
    limit = max_iter or 4 * g.n + 8
    for it in range(limit):
        prof = connectivity_profile(g, H)
        if not prof.bridges:
            break
        ledger.begin_iteration(prof.bridges)
        if root is None:
            R, ru, sel = select_root(g, H, ledger, prof)
            r = g.edge(ru).u if g.edge(ru).u in R.nodes else g.edge(ru).v
            root = R.key
            fresh = True
            if audit:
                _audit(g, H, ledger, cover_edges, root, f"root selection {it}")
        else:
            R = prof.block_containing(root)
            ru = choose_ru(g, prof, R)
            r = g.edge(ru).u if g.edge(ru).u in R.nodes else g.edge(ru).v
            sel = None
            fresh = False
        plan = find_ear(g, H, prof, R, ru, r)
        plan.tag = classify_prefix(g, prof, plan.q_nodes, plan.q_edges)
        second = None
        if plan.tag == "case3-double":
            comp = prof.component_containing(r)
            second, v3 = find_second_ear(g, H, prof, comp, r, plan)
            side_r = _sides(g, H, prof, ru, r)[1]
            if second.z0 in side_r:
                raise InternalError("second ear starts on the r-side of ru")
            plan.sell = [plan.q_edges[1]]
        rec = apply_ear(g, H, ledger, prof, R, plan, second)
        rec.update(iteration=it, fresh=fresh, selection=sel)
        after = connectivity_profile(g, H)
        Bn = after.block_containing(root)
        if Bn is None or not {plan.a0, plan.z0} <= Bn.nodes:
            raise InternalError("new root block does not contain the ear ends")
        ledger.deposit(Bn.edges)
        brs = after.block_bridges(Bn, g)
        if plan.tag in ("case2", "case3-unit") and not any(g.edge(b).cost == 1 for b in brs):
            raise InternalError("new root block is not incident to a unit-bridge")
        rec["root_credit"] = ledger.credit(Bn.edges)
        if not brs:
            root = None
        log.append(rec)
        if audit:
            _audit(g, H, ledger, cover_edges, root, f"iteration {it} ({plan.tag})")
    else:
        raise InternalError("bridge covering did not finish")
    prof = connectivity_profile(g, H)
    deg = {v: 0 for v in g.nodes}
    for eid in H:
        e = g.edge(eid)
        deg[e.u] += 1
        deg[e.v] += 1
    if prof.bridges or min(deg.values()) < 2:
        raise InternalError("bridge covering left a bridge or a light node")
    return BridgeCoverResult(frozenset(H), ledger, log, cover_edges)

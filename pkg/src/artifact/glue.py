"""Gluing: merge the 2ec-blocks of a bridgeless 2-edge cover into one
2-ECSS by ears through the root block.

The root R is the block holding the smallest node. Each iteration picks,
in order of preference:
  (a) a block with at least 8 quarters and two edges to R;
  (b) the shortest cycle of at least three blocks through R;
  (c) a poor two-edge cycle R, B, R, handled by selling unit-edges of B.
R's own credit is never spent.
"""

import heapq
from collections import deque
from dataclasses import dataclass, field

from .errors import AuditFailure, InternalError
from .ledger import POOL, audit_credit_invariant
from .multigraph import connectivity_profile, is_2ec, non_essential_check


@dataclass
class GluePlan:
    tag: str
    block: int
    buy: list
    sell: list = field(default_factory=list)
    sources: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)


@dataclass
class GlueResult:
    edges: frozenset
    ledger: object
    log: list


class BlockGraph:
    """The multigraph obtained by contracting each block of H. Edges keep
    their ids; `between[(i, j)]` lists them sorted by (cost, id)."""

    def __init__(self, g, H):
        self.g = g
        self.prof = connectivity_profile(g, H)
        self.block_of = self.prof.block_of
        self.between = {}
        self.nbrs = {}
        for e in g.edges:
            if e.id in H:
                continue
            a, b = self.block_of.get(e.u), self.block_of.get(e.v)
            if a is None or b is None or a == b:
                continue
            for x, y in ((a, b), (b, a)):
                self.between.setdefault((x, y), []).append(e)
                self.nbrs.setdefault(x, set()).add(y)
        for k in self.between:
            self.between[k].sort(key=lambda e: (e.cost, e.id))

    def block(self, i):
        return self.prof.blocks[i]

    def cross(self, i, j):
        return self.between.get((i, j), [])

    def shortest_cycle(self, r):
        best = None
        around = sorted(self.nbrs.get(r, ()), key=lambda i: self.block(i).key)
        for x in around:
            prev = {x: None}
            todo = deque([x])
            hit = None
            while todo and hit is None:
                a = todo.popleft()
                for b in sorted(self.nbrs.get(a, ()), key=lambda i: self.block(i).key):
                    if b == r or b in prev:
                        continue
                    prev[b] = a
                    if b in self.nbrs.get(r, ()):
                        hit = b
                        break
                    todo.append(b)
            if hit is None:
                continue
            chain = [hit]
            while prev[chain[-1]] is not None:
                chain.append(prev[chain[-1]])
            chain.reverse()
            if best is None or len(chain) < len(best):
                best = chain
        return best


def glue_case1(g, H, B, cross):
    """Pairs (e, f) of R-B edges with distinct ends in B joined by a
    unit-edge of B: buy e, f and sell that edge."""
    zero_only = False
    for i, e in enumerate(cross):
        ve = e.u if e.u in B.nodes else e.v
        for f in cross[i + 1:]:
            uf = f.u if f.u in B.nodes else f.v
            if uf == ve:
                continue
            inner = [g.edge(x) for x in sorted(B.edges) if {g.edge(x).u, g.edge(x).v} == {ve, uf}]
            units = [x for x in inner if x.cost == 1]
            if units:
                return GluePlan("glue-case1", B.key, [e.id, f.id], [units[0].id],
                                [B.edges, POOL], {"v_e": ve, "u_f": uf})
            if inner:
                zero_only = True
    if zero_only:
        raise InternalError(f"block {B.key} meets R only across zero-edges")
    return None


def _spanning_cycle(g, B, v1, v3):
    v2, v4 = sorted(B.nodes - {v1, v3})

    def edge(a, b):
        c = [x for x in sorted(B.edges) if {g.edge(x).u, g.edge(x).v} == {a, b}]
        if not c:
            raise InternalError(f"block {B.key} has no spanning 4-cycle through {v1},{v3}")
        return min(c, key=lambda x: (-g.edge(x).cost, x))

    return [v1, v2, v3, v4], [edge(v1, v2), edge(v2, v3), edge(v3, v4), edge(v4, v1)]


def _cheapest_path(g, H, starts, targets, banned):
    """Path from `starts` to `targets` avoiding `banned` nodes, minimizing
    (new edges, edges, node sequence)."""
    adj = {}
    for e in g.edges:
        if e.u in banned or e.v in banned or e.u == e.v:
            continue
        w = 0 if e.id in H else 1
        adj.setdefault(e.u, []).append((e.v, w, e.id))
        adj.setdefault(e.v, []).append((e.u, w, e.id))
    heap = [(0, 0, (s,), ()) for s in sorted(starts)]
    heapq.heapify(heap)
    done = set()
    while heap:
        c, n, nodes, edges = heapq.heappop(heap)
        x = nodes[-1]
        if x in done:
            continue
        done.add(x)
        if x in targets:
            return list(nodes), list(edges)
        for y, w, eid in adj.get(x, ()):
            if y not in done and y not in starts:
                heapq.heappush(heap, (c + w, n + 1, nodes + (y,), edges + (eid,)))
    return None


def glue_case2(g, H, bg, r, bi, cross):
    """Poor 4-node block whose R-edges land on opposite corners."""
    B = bg.block(bi)
    R = bg.block(r)
    if len(B.nodes) != 4:
        raise InternalError(f"block {B.key} has no adjacent endpoint pair and {len(B.nodes)} nodes")
    e = cross[0]
    ve = e.u if e.u in B.nodes else e.v
    f = next((x for x in cross if (x.u if x.u in B.nodes else x.v) != ve), None)
    if f is None:
        raise InternalError(f"all R-edges of block {B.key} share an end")
    uf = f.u if f.u in B.nodes else f.v
    q_nodes, q_edges = _spanning_cycle(g, B, ve, uf)
    v2, v4 = q_nodes[1], q_nodes[3]
    units = [x for x in q_edges if g.edge(x).cost == 1]
    diag = [x for x in g.edges_between(v2, v4)]
    if diag:
        d = min(diag, key=lambda x: (x.cost, x.id))
        return GluePlan("glue-case2a", B.key, [e.id, f.id, d.id], units,
                        [B.edges, POOL], {"Q": q_nodes})
    out = []
    for x in (v2, v4):
        for h in g.incident(x):
            y = h.other(x)
            j = bg.block_of.get(y)
            if j is not None and j not in (bi, r):
                out.append((h.id, x, j))
    if not out:
        raise InternalError(f"corners of block {B.key} see no other block")
    et, x, j = min(out)
    Bp = bg.block(j)
    found = _cheapest_path(g, H, Bp.nodes, B.nodes - {x}, {x} | set(R.nodes))
    if found is None:
        raise InternalError(f"no path from block {Bp.key} back to block {B.key}")
    pn, pe = found
    eq = [q for q in units if x in (g.edge(q).u, g.edge(q).v)]
    if len(eq) != 1:
        raise InternalError(f"corner {x} does not carry exactly one unit-edge of Q")
    srcs = []
    seen = {bi}
    for y in pn:
        k = bg.block_of.get(y)
        if k is not None and k not in seen:
            seen.add(k)
            srcs.append(bg.block(k).edges)
    buy = [et] + [p for p in pe if p not in H] + [e.id, f.id]
    return GluePlan("glue-case2b", B.key, buy, eq, srcs + [B.edges, POOL],
                    {"Q": q_nodes, "x": x, "e_tilde": et, "far_block": Bp.key, "path": pn})


def plan_iteration(g, H, ledger):
    bg = BlockGraph(g, H)
    r = bg.block_of[min(g.nodes)]
    nb = sorted(bg.nbrs.get(r, ()), key=lambda i: bg.block(i).key)
    if not nb:
        raise InternalError("root block has no neighbour but H is not spanning-2EC")
    for i in nb:
        B = bg.block(i)
        cross = bg.cross(i, r)
        if ledger.credit(B.edges) >= 8 and len(cross) >= 2:
            return GluePlan("glue-rich", B.key, [cross[0].id, cross[1].id], [],
                            [B.edges, POOL]), bg
    cyc = bg.shortest_cycle(r)
    if cyc is not None:
        hops = [r] + cyc + [r]
        buy = [bg.cross(a, b)[0].id for a, b in zip(hops, hops[1:])]
        srcs = [bg.block(i).edges for i in cyc] + [POOL]
        return GluePlan("glue-cycle", bg.block(cyc[0]).key, buy, [], srcs,
                        {"blocks": [bg.block(i).key for i in cyc]}), bg
    two = [i for i in nb if len(bg.cross(i, r)) >= 2]
    if not two:
        raise InternalError("no cycle of the block graph passes through the root")
    bi = two[0]
    B = bg.block(bi)
    c = ledger.credit(B.edges)
    if c >= 8 or len(B.nodes) not in (2, 3, 4):
        raise InternalError(f"poor block {B.key} has {c} quarters and {len(B.nodes)} nodes")
    cross = bg.cross(bi, r)
    plan = glue_case1(g, H, B, cross)
    if plan is None:
        plan = glue_case2(g, H, bg, r, bi, cross)
    return plan, bg


def apply_plan(g, H, ledger, plan):
    H2 = set(H) | set(plan.buy)
    for s in plan.sell:
        if not non_essential_check(g, s, H2):
            raise InternalError(f"edge {s} is essential and cannot be sold")
        H2.discard(s)
        ledger.sell(s)
    for eid in plan.buy:
        if eid not in H:
            ledger.buy(eid, plan.sources, f"{plan.tag} edge {eid}")
    H.clear()
    H.update(H2)


def glue(g, H, ledger, cover_edges=None, audit=True):
    """Augment the bridgeless cover H to a 2-ECSS, paying from the ledger."""
    H = set(H)
    root = min(g.nodes)
    log = []
    for it in range(g.n + 1):
        prof = connectivity_profile(g, H)
        if len(prof.components) == 1 and not prof.bridges:
            break
        if prof.bridges:
            raise InternalError("gluing needs a bridgeless cover")
        ledger.begin_iteration(())
        plan, _bg = plan_iteration(g, H, ledger)
        before = ledger.snapshot()
        apply_plan(g, H, ledger, plan)
        prof = connectivity_profile(g, H)
        R = prof.block_containing(root)
        ledger.deposit(R.edges if R is not None else H)
        log.append({"iteration": it, "tag": plan.tag, "block": plan.block,
                    "bought": list(plan.buy), "sold": list(plan.sell),
                    "detail": plan.detail, "before": before, "after": ledger.snapshot()})
        if audit and cover_edges is not None:
            bad = audit_credit_invariant(g, H, ledger, cover_edges, root,
                                         f"glue {it}", check_bridges=False, skip_root=True)
            if bad:
                raise AuditFailure(f"glue {it} ({plan.tag})", bad)
    else:
        raise InternalError("gluing did not finish")
    if not is_2ec(g, H):
        raise InternalError("gluing did not produce a 2-ECSS")
    return GlueResult(frozenset(H), ledger, log)

"""Quarter-unit credit accounting for bridge covering and gluing.

Every unit-edge of the starting cover carries 7 quarters: 4 retained and
3 working. Credit lives on edges; the credit of a block, bridge or
component is the working credit summed over its edges, so merging
entities needs no bookkeeping. Money only moves through `take` (pay
from listed sources), `buy`, `sell` and `deposit`.
"""

from collections import deque

from .errors import CreditError
from .multigraph import connectivity_profile

RETAIN = 4
WORK = 3
POOL = "pool"


class CreditLedger:
    def __init__(self, g, cover_edges):
        self.g = g
        units = [i for i in cover_edges if g.edge(i).cost == 1]
        self.u0 = len(units)
        self.retained = {i: RETAIN for i in units}
        self.working = {i: WORK for i in units}
        self.pool = 0
        self.released = 0
        self.spent = 0
        self.takeaway = {}        # bridge id -> iterations that drew on it
        self.bridges_now = frozenset()
        self.iteration = 0
        self.log = []

    # -- queries
    def credit(self, edge_ids):
        return sum(self.working.get(i, 0) for i in edge_ids)

    def total(self):
        return sum(self.working.values()) + sum(self.retained.values()) + self.pool

    # -- movements
    def take(self, amount, sources, why=""):
        """Draw `amount` quarters from the sources in order. A source is
        POOL or an iterable of edge ids, drained smallest id first."""
        need = amount
        drawn = []
        for src in sources:
            if need == 0:
                break
            if src == POOL:
                x = min(need, self.pool)
                self.pool -= x
                need -= x
                if x:
                    drawn.append((POOL, x))
                continue
            for eid in sorted(src):
                have = self.working.get(eid, 0)
                if have <= 0:
                    continue
                x = min(need, have)
                self.working[eid] = have - x
                need -= x
                drawn.append((eid, x))
                if eid in self.bridges_now:
                    self.takeaway.setdefault(eid, set()).add(self.iteration)
                if need == 0:
                    break
        if need:
            for src, x in drawn:  # roll back before failing
                if src == POOL:
                    self.pool += x
                else:
                    self.working[src] += x
            raise CreditError(f"short {need} quarters paying for {why}")
        return drawn

    def buy(self, eid, sources, why=""):
        e = self.g.edge(eid)
        if e.cost == 0:
            self.retained.setdefault(eid, 0)
            self.working.setdefault(eid, 0)
            return []
        drawn = self.take(RETAIN, sources, why or f"edge {eid}")
        self.retained[eid] = RETAIN
        self.working[eid] = 0
        self.spent += RETAIN
        return drawn

    def sell(self, eid):
        """Drop a unit-edge; its retained and working credit go to the
        pool. Only the retained part is new money."""
        r = self.retained.pop(eid, 0)
        x = r + self.working.pop(eid, 0)
        self.pool += x
        self.released += r
        return x

    def deposit(self, edge_ids):
        """Move whatever sits in the pool onto the smallest unit-edge id."""
        if not self.pool:
            return
        units = sorted(i for i in edge_ids if self.g.edge(i).cost == 1 and i in self.working)
        if not units:
            raise CreditError("no unit-edge to hold leftover credit")
        self.working[units[0]] += self.pool
        self.pool = 0

    def move(self, amount, src_edges, dst_edges, why=""):
        self.take(amount, [src_edges], why)
        units = sorted(i for i in dst_edges if self.g.edge(i).cost == 1)
        self.working[units[0]] += amount

    def begin_iteration(self, bridges):
        self.iteration += 1
        self.bridges_now = frozenset(bridges)

    def snapshot(self):
        return {"working": sum(self.working.values()), "retained": sum(self.retained.values()),
                "pool": self.pool, "released": self.released, "spent": self.spent}


def _incident(g, edge_ids, nodes):
    return frozenset(i for i in edge_ids if g.edge(i).u in nodes or g.edge(i).v in nodes)


def b_adjacent_blocks(g, prof, block):
    """Indices of blocks joined to `block` by a b-path: bridges whose
    internal nodes are black."""
    start = set(block.nodes)
    seen = set(start)
    todo = deque(start)
    found = set()
    own = prof.block_of.get(next(iter(block.nodes)))
    while todo:
        x = todo.popleft()
        if x not in start and prof.is_white(x):
            found.add(prof.block_of[x])
            continue
        for eid in prof.bridges_at.get(x, ()):
            y = g.edge(eid).other(x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    found.discard(own)
    return found


def audit_credit_invariant(g, H, ledger, cover_edges, root=None, phase="",
                           check_bridges=True, skip_root=False):
    """All violations of the credit invariant for the current H.

    `root` is a node of the root block, or None when no root is
    designated. Original means: the edges of H incident to the entity's
    nodes are exactly those of the starting cover. With `skip_root` the
    root block's own credit is not checked; gluing ignores it.
    """
    bad = []
    H = frozenset(H)
    cover_edges = frozenset(cover_edges)
    for eid in H:
        e = g.edge(eid)
        if e.cost == 1:
            if ledger.retained.get(eid) != RETAIN:
                bad.append(f"unit-edge {eid} retains {ledger.retained.get(eid)}")
        elif ledger.working.get(eid, 0) or ledger.retained.get(eid, 0):
            bad.append(f"zero-edge {eid} holds credit")
    for eid, x in ledger.working.items():
        if x < 0:
            bad.append(f"edge {eid} has negative credit {x}")
        if eid not in H and x:
            bad.append(f"edge {eid} outside H holds {x}")
    if ledger.pool < 0:
        bad.append("pool is negative")
    if ledger.total() != 7 * ledger.u0:
        bad.append(f"conservation: total {ledger.total()} != {7 * ledger.u0}")
    if sum(ledger.retained.values()) != RETAIN * g.cost(H):
        bad.append("retained credit does not match cost(H)")
    if sum(ledger.working.values()) + ledger.pool != WORK * ledger.u0 + ledger.released - ledger.spent:
        bad.append("working credit does not match released minus spent")
    for eid, its in ledger.takeaway.items():
        if len(its) > 1:
            bad.append(f"credit taken from bridge {eid} in {len(its)} iterations")

    prof = connectivity_profile(g, H)

    def original(nodes):
        return _incident(g, H, nodes) == _incident(g, cover_edges, nodes)

    if check_bridges:
        for eid in prof.bridges:
            if g.edge(eid).cost == 1 and ledger.working.get(eid) != WORK:
                bad.append(f"unit-bridge {eid} holds {ledger.working.get(eid)} quarters, not 3")
    bridged = {prof.comp_of[g.edge(b).u] for b in prof.bridges}
    for ci, comp in enumerate(prof.components):
        if ci in bridged or len(comp) < 2:
            continue
        if skip_root and root in comp:
            continue
        c = ledger.credit(_incident(g, H, comp))
        need = 6 if original(comp) else 8
        if c < need:
            bad.append(f"2EC component at {min(comp)} has {c} < {need}")
    for ci, comp in enumerate(prof.components):
        if ci not in bridged or not original(comp):
            continue
        for b in prof.blocks:
            if min(b.nodes) not in comp:
                continue
            brs = prof.block_bridges(b, g)
            if len(brs) == 1 and g.edge(brs[0]).cost == 0 and ledger.credit(b.edges) < 9:
                bad.append(f"pendant block at {b.key} on a zero-bridge has {ledger.credit(b.edges)} < 9")

    R = prof.block_containing(root) if root is not None else None
    adj = set()
    if R is not None:
        brs = prof.block_bridges(R, g)
        c = ledger.credit(R.edges)
        need = 9 if brs and all(g.edge(b).cost == 0 for b in brs) else 8
        if c < need and not skip_root:
            bad.append(f"root block at {R.key} has {c} < {need}")
        adj = b_adjacent_blocks(g, prof, R)
    for i, b in enumerate(prof.blocks):
        if b is R:
            continue
        c = ledger.credit(b.edges)
        need = 4 if i in adj else 6
        if c < need:
            bad.append(f"block at {b.key} has {c} < {need}")
    return bad

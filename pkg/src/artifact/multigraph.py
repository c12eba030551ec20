"""Loop-free {0,1}-cost multigraphs and their connectivity primitives.

Node ids and edge ids are plain integers. Every reduction in the package
keeps edge ids intact, so a solution of a derived instance is directly a
set of edge ids of the instance it came from.
"""

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import InvalidInstance


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    cost: int

    def other(self, x):
        return self.v if x == self.u else self.u

    def pair(self):
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)


class MapInstance:
    """Immutable multigraph with {0,1} edge costs.

    Nothing here enforces the MAP conditions; `validate` does that for raw
    input, and every derived instance inherits them by construction.
    """

    __slots__ = ("nodes", "edges", "_edge", "_inc", "_node_set")

    def __init__(self, nodes, edges):
        self.nodes = tuple(sorted(set(nodes)))
        self.edges = tuple(sorted(edges, key=lambda e: e.id))
        self._node_set = frozenset(self.nodes)
        self._edge = {e.id: e for e in self.edges}
        inc = {v: [] for v in self.nodes}
        for e in self.edges:
            inc[e.u].append(e)
            inc[e.v].append(e)
        self._inc = {v: tuple(es) for v, es in inc.items()}

    def __reduce__(self):
        return (MapInstance, (self.nodes, self.edges))

    def __repr__(self):
        return f"MapInstance(n={self.n}, m={self.m}, cost={self.total_cost()})"

    def __eq__(self, other):
        return (isinstance(other, MapInstance) and self.nodes == other.nodes
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.nodes, self.edges))

    @property
    def n(self):
        return len(self.nodes)

    @property
    def m(self):
        return len(self.edges)

    @property
    def node_set(self):
        return self._node_set

    def edge(self, eid):
        return self._edge[eid]

    def has_edge(self, eid):
        return eid in self._edge

    def edge_ids(self):
        return frozenset(self._edge)

    def incident(self, v):
        return self._inc[v]

    def degree(self, v):
        return len(self._inc[v])

    def cost(self, edge_ids):
        return sum(self._edge[i].cost for i in edge_ids)

    def total_cost(self):
        return sum(e.cost for e in self.edges)

    def zero_edges(self):
        return frozenset(e.id for e in self.edges if e.cost == 0)

    def unit_edges(self):
        return frozenset(e.id for e in self.edges if e.cost == 1)

    def zero_edge_at(self, v):
        for e in self._inc[v]:
            if e.cost == 0:
                return e
        return None

    def edges_between(self, a, b):
        return [e for e in self._inc[a] if e.other(a) == b]

    def zero_one_pairs(self):
        """Parallel pairs made of one zero-edge and one unit-edge."""
        out = []
        for e in self.edges:
            if e.cost != 0:
                continue
            for f in self.edges_between(e.u, e.v):
                if f.cost == 1:
                    out.append((e.id, f.id))
        return out

    def subgraph(self, edge_ids):
        """Spanning subgraph keeping every node."""
        return MapInstance(self.nodes, [self._edge[i] for i in edge_ids])

    def induced(self, node_set):
        node_set = frozenset(node_set)
        es = [e for e in self.edges if e.u in node_set and e.v in node_set]
        return MapInstance(node_set, es)

    def edge_induced(self, edge_ids):
        es = [self._edge[i] for i in edge_ids]
        ns = {x for e in es for x in (e.u, e.v)}
        return MapInstance(ns, es)

    def without_nodes(self, drop):
        return self.induced(self._node_set - frozenset(drop))


def adjacency(nodes, edges):
    """node -> list of (neighbour, edge id), in edge id order."""
    adj = {v: [] for v in nodes}
    for e in sorted(edges, key=lambda e: e.id):
        adj[e.u].append((e.v, e.id))
        adj[e.v].append((e.u, e.id))
    return adj


def validate(raw_edges, nodes=None, require_2ec=True):
    """Build a MapInstance from (u, v, cost) triples.

    Extra parallel copies beyond two are dropped, keeping the cheapest; an
    edge-minimal 2-ECSS never uses a third copy. Edge ids are assigned in
    input order over the retained edges.
    """
    triples = [tuple(t) for t in raw_edges]
    if nodes is None:
        nodes = {x for t in triples for x in t[:2]}
    elif isinstance(nodes, int):
        nodes = range(1, nodes + 1)
    node_set = set(nodes)
    by_pair = defaultdict(list)
    for pos, (u, v, c) in enumerate(triples):
        if u == v:
            raise InvalidInstance(f"loop at node {u}")
        if c not in (0, 1):
            raise InvalidInstance(f"edge {u}-{v} has cost {c}, expected 0 or 1")
        if u not in node_set or v not in node_set:
            raise InvalidInstance(f"edge {u}-{v} uses an unknown node")
        by_pair[(min(u, v), max(u, v))].append((c, pos))
    keep = set()
    for copies in by_pair.values():
        copies.sort()
        keep.update(pos for _c, pos in copies[:2])
    edges = []
    for pos in sorted(keep):
        u, v, c = triples[pos]
        edges.append(Edge(len(edges), u, v, c))
    g = MapInstance(node_set, edges)
    seen = {}
    for e in g.edges:
        if e.cost == 0:
            for x in (e.u, e.v):
                if x in seen:
                    raise InvalidInstance(
                        f"zero-edges {seen[x]} and {e.id} share node {x}; zero-edges must form a matching")
                seen[x] = e.id
    if require_2ec and not is_2ec(g):
        raise InvalidInstance("graph is not 2-edge-connected")
    return g


@dataclass
class Block:
    nodes: frozenset
    edges: frozenset

    @property
    def key(self):
        return min(self.nodes)


@dataclass
class ConnectivityProfile:
    nodes: tuple
    edges: frozenset
    bridges: frozenset
    blocks: list
    cut_nodes: frozenset
    components: list
    biconnected: list
    block_of: dict = field(default_factory=dict)
    comp_of: dict = field(default_factory=dict)
    bridges_at: dict = field(default_factory=dict)

    def is_white(self, v):
        return v in self.block_of

    def block_containing(self, v):
        i = self.block_of.get(v)
        return None if i is None else self.blocks[i]

    def component_containing(self, v):
        return self.components[self.comp_of[v]]

    def block_bridges(self, block, graph):
        """Bridges with exactly one end in the block."""
        out = set()
        for v in block.nodes:
            out.update(self.bridges_at.get(v, ()))
        return sorted(out)

    def pendant_blocks(self, graph):
        return [b for b in self.blocks if len(self.block_bridges(b, graph)) == 1]


def connectivity_profile(g, edge_ids=None):
    """Bridges, 2ec-blocks, cut nodes, components and biconnected blocks.

    `edge_ids` restricts to a spanning subgraph of `g`. One iterative
    lowpoint DFS produces bridges, articulation points and the biconnected
    edge classes; parallel edges are told apart by id.
    """
    if edge_ids is None:
        edges = g.edges
    else:
        edges = [g.edge(i) for i in edge_ids]
    nodes = g.nodes
    adj = adjacency(nodes, edges)
    disc, low = {}, {}
    bridges, cut = set(), set()
    bic, comps = [], []
    clock = 0
    for s in nodes:
        if s in disc:
            continue
        disc[s] = low[s] = clock
        clock += 1
        comp = [s]
        stack = [(s, None, iter(adj[s]))]
        estack = []
        root_children = 0
        while stack:
            x, pe, it = stack[-1]
            pushed = False
            for y, eid in it:
                if eid == pe:
                    continue
                if y not in disc:
                    disc[y] = low[y] = clock
                    clock += 1
                    comp.append(y)
                    estack.append(eid)
                    stack.append((y, eid, iter(adj[y])))
                    pushed = True
                    break
                if disc[y] < disc[x]:
                    low[x] = min(low[x], disc[y])
                    estack.append(eid)
            if pushed:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[x])
            if low[x] > disc[p]:
                bridges.add(pe)
            if low[x] >= disc[p]:
                cls = set()
                while True:
                    e = estack.pop()
                    cls.add(e)
                    if e == pe:
                        break
                bic.append(frozenset(cls))
                if len(stack) > 1:
                    cut.add(p)
                else:
                    root_children += 1
        if root_children >= 2:
            cut.add(s)
        comps.append(frozenset(comp))

    by_id = {e.id: e for e in edges}
    parent = {v: v for v in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    inner = defaultdict(set)
    for e in edges:
        if e.id not in bridges:
            a, b = find(e.u), find(e.v)
            if a != b:
                parent[a] = b
    for e in edges:
        if e.id not in bridges:
            inner[find(e.u)].add(e.id)
    groups = defaultdict(set)
    for v in nodes:
        groups[find(v)].add(v)
    blocks = [Block(frozenset(vs), frozenset(inner[r]))
              for r, vs in groups.items() if len(vs) >= 2]
    blocks.sort(key=lambda b: b.key)
    comps.sort(key=min)
    prof = ConnectivityProfile(
        nodes=nodes, edges=frozenset(by_id), bridges=frozenset(bridges),
        blocks=blocks, cut_nodes=frozenset(cut), components=comps,
        biconnected=bic)
    for i, b in enumerate(blocks):
        for v in b.nodes:
            prof.block_of[v] = i
    for i, c in enumerate(comps):
        for v in c:
            prof.comp_of[v] = i
    for eid in sorted(bridges):
        e = by_id[eid]
        prof.bridges_at.setdefault(e.u, []).append(eid)
        prof.bridges_at.setdefault(e.v, []).append(eid)
    return prof


def is_connected(g, edge_ids=None):
    if g.n == 0:
        return True
    edges = g.edges if edge_ids is None else [g.edge(i) for i in edge_ids]
    adj = adjacency(g.nodes, edges)
    seen = {g.nodes[0]}
    todo = [g.nodes[0]]
    while todo:
        x = todo.pop()
        for y, _ in adj[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == g.n


def is_2ec(g, edge_ids=None):
    if g.n < 2:
        return False
    prof = connectivity_profile(g, edge_ids)
    return len(prof.components) == 1 and not prof.bridges


def is_2nc(g):
    if g.n < 3:
        return False
    prof = connectivity_profile(g)
    return len(prof.components) == 1 and not prof.cut_nodes


def is_block(g):
    """2NC, or two nodes joined by at least two parallel edges."""
    if g.n == 2:
        return g.m >= 2
    return is_2nc(g)


def edge_disjoint_path_count(g, s, t, limit=2, edge_ids=None, skip=()):
    """Unit-capacity max-flow value between s and t, stopping at `limit`."""
    edges = g.edges if edge_ids is None else [g.edge(i) for i in edge_ids]
    skip = set(skip)
    edges = [e for e in edges if e.id not in skip]
    adj = adjacency(g.nodes, edges)
    flow = defaultdict(int)  # (edge id, tail) -> units sent from tail
    value = 0
    while value < limit:
        prev = {s: None}
        todo = deque([s])
        while todo and t not in prev:
            x = todo.popleft()
            for y, eid in adj[x]:
                if y in prev:
                    continue
                # residual capacity of x->y on an undirected unit edge
                if flow[(eid, x)] - flow[(eid, y)] < 1:
                    prev[y] = (x, eid)
                    todo.append(y)
        if t not in prev:
            break
        y = t
        while prev[y] is not None:
            x, eid = prev[y]
            if flow[(eid, y)] > 0:
                flow[(eid, y)] -= 1
            else:
                flow[(eid, x)] += 1
            y = x
        value += 1
    return value


def non_essential_check(g, eid, edge_ids=None):
    """True iff the graph minus this edge still has two edge-disjoint paths
    between its endpoints."""
    e = g.edge(eid)
    return edge_disjoint_path_count(g, e.u, e.v, 2, edge_ids, skip=(eid,)) >= 2


def contract(g, edge_ids):
    """Identify the endpoints of every edge in `edge_ids`.

    Returns the contracted instance and the old->new node map. A merged
    group is named by its smallest node. Loops vanish; where more than two
    parallel copies result, the cheapest two survive.
    """
    parent = {v: v for v in g.nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in edge_ids:
        e = g.edge(i)
        a, b = find(e.u), find(e.v)
        if a != b:
            if a < b:
                parent[b] = a
            else:
                parent[a] = b
    mapping = {v: find(v) for v in g.nodes}
    by_pair = defaultdict(list)
    for e in g.edges:
        a, b = mapping[e.u], mapping[e.v]
        if a == b:
            continue
        by_pair[(min(a, b), max(a, b))].append(Edge(e.id, a, b, e.cost))
    kept = []
    for copies in by_pair.values():
        copies.sort(key=lambda e: (e.cost, e.id))
        kept.extend(copies[:2])
    return MapInstance(set(mapping.values()), kept), mapping

"""Minimum-cost 2-edge covers and the pendant-block post-processing.

The cover is the complement of a maximum-cost subgraph D with
deg_D(v) <= deg(v) - 2, found through a perfect matching on a split
auxiliary graph. All weights stay integral.
"""

from dataclasses import dataclass, field

import networkx as nx

from .errors import InternalError, PreconditionError
from .multigraph import ConnectivityProfile, connectivity_profile


@dataclass
class EdgeCover:
    edges: frozenset
    degree: dict
    cost: int

    @classmethod
    def of(cls, g, edge_ids):
        edge_ids = frozenset(edge_ids)
        deg = {v: 0 for v in g.nodes}
        for i in edge_ids:
            e = g.edge(i)
            deg[e.u] += 1
            deg[e.v] += 1
        return cls(edge_ids, deg, g.cost(edge_ids))

    def is_cover(self):
        return all(d >= 2 for d in self.degree.values())


@dataclass
class PostprocessedCover(EdgeCover):
    profile: ConnectivityProfile = None
    swaps: list = field(default_factory=list)


def max_weight_perfect_matching(graph):
    """Maximum-weight perfect matching of a networkx graph with integer
    `weight` attributes, as a set of frozenset node pairs."""
    mate = nx.max_weight_matching(graph, maxcardinality=True, weight="weight")
    if 2 * len(mate) != graph.number_of_nodes():
        raise InternalError("auxiliary graph has no perfect matching")
    return {frozenset(p) for p in mate}


def _aux_graph(g):
    """Split graph whose perfect matchings are the subgraphs D with
    deg_D(v) <= deg(v) - 2.

    Node v gets deg(v)-2 copies; edge e = uv gets a_e (u side) and b_e
    (v side). Matching a_e-b_e leaves e out of D; matching both to
    copies puts e in D and earns cost(e). Unused copies pair off among
    themselves at weight zero.
    """
    aux = nx.Graph()
    copies = {v: [("c", v, i) for i in range(g.degree(v) - 2)] for v in g.nodes}
    slack = [c for cs in copies.values() for c in cs]
    aux.add_nodes_from(slack)
    for e in g.edges:
        a, b = ("a", e.id), ("b", e.id)
        aux.add_edge(a, b, weight=0)
        for c in copies[e.u]:
            aux.add_edge(c, a, weight=e.cost)
        for c in copies[e.v]:
            aux.add_edge(b, c, weight=0)
    for i, x in enumerate(slack):
        for y in slack[i + 1:]:
            aux.add_edge(x, y, weight=0)
    return aux


def min_cost_2edge_cover(g):
    """A minimum-cost 2-edge cover containing every zero-edge."""
    low = [v for v in g.nodes if g.degree(v) < 2]
    if low:
        raise PreconditionError(f"node {low[0]} has degree below two")
    mate = max_weight_perfect_matching(_aux_graph(g))
    dropped = set()
    for e in g.edges:
        if frozenset((("a", e.id), ("b", e.id))) not in mate:
            dropped.add(e.id)
    keep = (g.edge_ids() - dropped) | g.zero_edges()
    cover = EdgeCover.of(g, keep)
    if not cover.is_cover():
        raise InternalError("matching complement is not a 2-edge cover")
    return cover


def _bad_zero_bridges(g, prof):
    """F_0 as (zero-bridge id, pendant block) pairs: zero-bridges whose
    pendant block costs at most two."""
    out = []
    for b in prof.blocks:
        brs = prof.block_bridges(b, g)
        if len(brs) != 1:
            continue
        br = g.edge(brs[0])
        if br.cost == 0 and g.cost(b.edges) <= 2:
            out.append((br.id, b))
    return sorted(out, key=lambda t: (t[0], t[1].key))


def postprocess_cover(g, cover):
    """Swap unit-edges until no zero-bridge hangs a pendant block of cost
    at most two. Cost and the cover property are kept by every swap."""
    F = set(cover.edges)
    if not g.zero_edges() <= F:
        raise PreconditionError("cover must contain every zero-edge")
    swaps = []
    prof = connectivity_profile(g, F)
    bad = _bad_zero_bridges(g, prof)
    while bad:
        zid, B = bad[0]
        z = g.edge(zid)
        v0 = z.u if z.u in B.nodes else z.v
        if g.cost(B.edges) != 2 or len(B.nodes) not in (2, 3):
            raise InternalError(f"pendant block at zero-bridge {zid} has unexpected shape")
        outside = [e for x in sorted(B.nodes - {v0}) for e in g.incident(x)
                   if e.cost == 1 and e.other(x) not in B.nodes]
        if not outside:
            raise PreconditionError(
                f"no unit-edge leaves the pendant block at {v0}; instance is not 2-node-connected")
        e = min(outside, key=lambda e: e.id)
        w = e.u if e.u in B.nodes else e.v
        fs = [i for i in sorted(B.edges) if g.edge(i).cost == 1 and set(g.edge(i).pair()) == {w, v0}]
        if not fs:
            raise InternalError(f"no unit-edge joins {w} and {v0} inside the pendant block")
        f = fs[0]
        before = len(bad) + len(prof.components)
        F.discard(f)
        F.add(e.id)
        swaps.append((f, e.id))
        prof = connectivity_profile(g, F)
        bad = _bad_zero_bridges(g, prof)
        if len(bad) + len(prof.components) >= before:
            raise InternalError("post-processing swap did not make progress")
    out = EdgeCover.of(g, F)
    if out.cost != cover.cost or not out.is_cover():
        raise InternalError("post-processing changed the cost or broke the cover")
    return PostprocessedCover(out.edges, out.degree, out.cost, profile=prof, swaps=swaps)

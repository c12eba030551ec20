"""Reduction of an arbitrary MAP instance to well-structured pieces.

Four reductions, applied as a tree:

* pp1: {0,1}-edge-pairs are split off (if the pair is essential) or lose
  their unit copy;
* pp2: redundant 4-cycles are contracted and later added back whole;
* pp3: the instance splits at cut nodes into its blocks;
* pp4: a bad pair's zero-edge is handed to exactly one of its
  bp-components, the others see it contracted.

Edge ids survive every step, so reassembly is a set union.
"""

from dataclasses import dataclass, field

from .cover import min_cost_2edge_cover
from .errors import InternalError, PreconditionError
from .multigraph import (MapInstance, connectivity_profile, contract,
                         is_2ec, is_connected)


@dataclass
class TraceNode:
    instance: MapInstance
    kind: str                     # leaf | pair-split | pair-delete | cycle4 | blocks | badpair
    forced: frozenset = frozenset()
    children: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def leaves(self):
        if self.kind == "leaf":
            return [self]
        out = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def to_dict(self):
        d = {"kind": self.kind, "n": self.instance.n, "m": self.instance.m,
             "forced": sorted(self.forced)}
        d.update({k: v for k, v in self.info.items() if isinstance(v, (int, str, list, tuple))})
        if self.children:
            d["children"] = [c.to_dict() for c in self.children]
        return d


# ---------------------------------------------------------------- pp1

def _components_without(g, drop_edges):
    keep = g.edge_ids() - set(drop_edges)
    prof = connectivity_profile(g, keep)
    return prof.components


def _pp1(g):
    pairs = g.zero_one_pairs()
    if not pairs:
        return None
    zid, uid = pairs[0]
    comps = _components_without(g, (zid, uid))
    if len(comps) > 1:
        children = []
        for side in comps:
            if len(side) < 2:
                continue
            sub = g.induced(side)
            if not is_2ec(sub):
                raise InternalError("side of an essential {0,1}-edge-pair is not 2EC")
            children.append(side_tree(sub))
        return TraceNode(g, "pair-split", frozenset((zid, uid)), children,
                         {"pair": [zid, uid]})
    child = g.subgraph(g.edge_ids() - {uid})
    return TraceNode(g, "pair-delete", frozenset(), [side_tree(child)], {"deleted": uid})


def side_tree(g):
    node = _pp1(g)
    return node if node is not None else _reduce(g)


def eliminate_01_pairs(g):
    """Instances left after removing every {0,1}-edge-pair, and the
    trace that rebuilds a solution of `g` from theirs."""
    tree = _pp1(g)
    if tree is None:
        return [g], None

    def tops(node):
        if node.kind in ("pair-split", "pair-delete"):
            out = []
            for c in node.children:
                out.extend(tops(c))
            return out
        return [node.instance]

    return tops(tree), tree


# ---------------------------------------------------------------- pp2

def find_redundant_4cycles(g):
    """Redundant 4-cycles as tuples of four edge ids (zero, unit, zero,
    unit), sorted. They are pairwise node-disjoint."""
    zeros = sorted((g.edge(i) for i in g.zero_edges()), key=lambda e: e.id)
    found = []
    for i, z1 in enumerate(zeros):
        for z2 in zeros[i + 1:]:
            for a, b in ((z1.u, z1.v), (z1.v, z1.u)):
                # cycle a-b (zero), b-c (unit), c-d (zero), d-a (unit)
                for c, d in ((z2.u, z2.v), (z2.v, z2.u)):
                    nodes = {a, b, c, d}
                    if nodes == g.node_set:
                        continue
                    for x, y in ((a, c), (b, d)):
                        if g.degree(x) == 2 and g.degree(y) == 2:
                            bc = [e for e in g.edges_between(b, c) if e.cost == 1]
                            da = [e for e in g.edges_between(d, a) if e.cost == 1]
                            if bc and da:
                                cyc = tuple(sorted((z1.id, z2.id, bc[0].id, da[0].id)))
                                if cyc not in found:
                                    found.append(cyc)
    found.sort()
    seen = set()
    for cyc in found:
        ns = {x for eid in cyc for x in g.edge(eid).pair()}
        if seen & ns:
            raise InternalError("redundant 4-cycles overlap")
        seen |= ns
    return found


def contract_redundant_4cycles(g):
    cycles = find_redundant_4cycles(g)
    if not cycles:
        return g, None
    ids = [eid for c in cycles for eid in c]
    h, mapping = contract(g, ids)
    return h, {"cycles": cycles, "mapping": mapping, "q": len(cycles)}


# ---------------------------------------------------------------- pp3

def block_decompose(g):
    """Blocks of `g` as separate instances (2NC, or two nodes with two
    parallel edges), ordered by smallest edge id."""
    prof = connectivity_profile(g)
    if prof.bridges:
        raise PreconditionError("block decomposition needs a 2EC instance")
    blocks = [g.edge_induced(ids) for ids in prof.biconnected]
    blocks.sort(key=lambda b: b.edges[0].id)
    return blocks, sorted(prof.cut_nodes)


# ---------------------------------------------------------------- pp4

@dataclass
class BadPairStructure:
    bad_pairs: list                 # (v, w, zero-edge id)
    components: dict                # (v, w) -> list of node frozensets

    def count_in(self, nodes):
        return sum(1 for v, w, _z in self.bad_pairs if v in nodes and w in nodes)


def find_bad_pairs(g):
    pairs, comps = [], {}
    for zid in sorted(g.zero_edges()):
        e = g.edge(zid)
        rest = g.without_nodes((e.u, e.v))
        if rest.n == 0:
            continue
        cs = connectivity_profile(rest).components
        if len(cs) > 1:
            v, w = e.pair()
            pairs.append((v, w, zid))
            comps[(v, w)] = list(cs)
    return BadPairStructure(pairs, comps)


def _ordered_components(bps, key):
    cs = bps.components[key]
    return sorted(cs, key=lambda c: (-bps.count_in(c), -len(c), min(c)))


def pick_bad_pair(g, bps=None):
    """A bad pair all of whose bp-components but the first are free of
    bad pairs, by descending into the second component.

    Returns ((v, w, zero id), components ordered with the non-free one
    first)."""
    bps = bps or find_bad_pairs(g)
    if not bps.bad_pairs:
        raise PreconditionError("instance has no bad pair")
    cur = bps.bad_pairs[0]
    for _ in range(g.n + 1):
        cs = _ordered_components(bps, cur[:2])
        if bps.count_in(cs[1]) == 0:
            return cur, cs
        cur = next(p for p in bps.bad_pairs if p[0] in cs[1] and p[1] in cs[1])
    raise InternalError("bad-pair descent did not terminate")


def with_edge(g, comp, v, w):
    """C^{v,w}: the subgraph induced by the component and the pair."""
    return g.induced(set(comp) | {v, w})


def with_contraction(g, comp, v, w, zid):
    """C^(contracted): C^{v,w} with vw contracted, or C^{v,w} itself when
    the component is a single node."""
    full = with_edge(g, comp, v, w)
    if len(comp) == 1:
        return full
    h, _m = contract(full, [zid])
    return h


def verify_well_structured(g):
    violations = []
    if g.zero_one_pairs():
        violations.append("{0,1}-edge-pair")
    if find_redundant_4cycles(g):
        violations.append("redundant 4-cycle")
    prof = connectivity_profile(g)
    if prof.cut_nodes or len(prof.components) > 1:
        violations.append("cut node")
    if find_bad_pairs(g).bad_pairs:
        violations.append("bad-pair")
    return not violations, violations


def tau(g):
    """tau of a well-structured piece (a 2-node block is its two edges)."""
    if g.n == 2:
        return g.total_cost()
    return min_cost_2edge_cover(g).cost


def tau_hat(g):
    """2q plus tau summed over the well-structured pieces left by
    contracting redundant 4-cycles and splitting into blocks."""
    if g.zero_one_pairs():
        raise PreconditionError("tau_hat needs an instance without {0,1}-edge-pairs")
    prof = connectivity_profile(g)
    if prof.cut_nodes or len(prof.components) > 1:
        raise PreconditionError("tau_hat needs an instance without cut nodes")
    if find_bad_pairs(g).bad_pairs:
        raise PreconditionError("tau_hat needs an instance without bad pairs")
    return _tau_hat(g)


def _tau_hat(g):
    h, rec = contract_redundant_4cycles(g)
    extra = 0
    if rec is not None:
        extra = 2 * rec["q"]
        g = h
    blocks, cuts = block_decompose(g) if g.n > 2 else ([g], [])
    if len(blocks) == 1 and rec is None:
        return tau(g)
    return extra + sum(_tau_hat(b) for b in blocks)


def allocate_bad_pair(g, pair, comps):
    """Sub-instances for one bad pair: the zero-edge goes to the first
    component unless some leaf component loses nothing by keeping it.

    Returns (children, info); children[0] is the side of the first
    component."""
    v, w, zid = pair
    leaves = comps[1:]
    vals = []
    for c in leaves:
        tw = tau_hat(with_edge(g, c, v, w))
        tc = tau_hat(with_contraction(g, c, v, w, zid))
        if tc > tw:
            raise InternalError("contracting the zero-edge raised tau_hat")
        vals.append((tc, tw))
    ties = [i for i, (tc, tw) in enumerate(vals) if tc == tw]
    if not ties:
        owner = 0
    else:
        owner = ties[0] + 1
    kids, modes = [], []
    for i, c in enumerate(comps):
        if i == owner:
            kids.append(with_edge(g, c, v, w))
            modes.append("kept")
        else:
            kids.append(with_contraction(g, c, v, w, zid))
            modes.append("contracted")
    info = {"pair": [v, w], "edge": zid, "owner": owner, "modes": modes,
            "tau_hat": [list(t) for t in vals]}
    return kids, info


# ---------------------------------------------------------------- driver

def _reduce(g):
    if g.n <= 2:
        return TraceNode(g, "leaf")
    h, rec = contract_redundant_4cycles(g)
    if rec is not None:
        forced = frozenset(eid for c in rec["cycles"] for eid in c)
        return TraceNode(g, "cycle4", forced, [_reduce(h)],
                         {"q": rec["q"], "cycles": [list(c) for c in rec["cycles"]]})
    prof = connectivity_profile(g)
    if prof.cut_nodes:
        blocks, cuts = block_decompose(g)
        return TraceNode(g, "blocks", frozenset(), [_reduce(b) for b in blocks],
                         {"cut_nodes": cuts})
    bps = find_bad_pairs(g)
    if bps.bad_pairs:
        pair, comps = pick_bad_pair(g, bps)
        kids, info = allocate_bad_pair(g, pair, comps)
        before = len(bps.bad_pairs)
        node = TraceNode(g, "badpair", frozenset(), [_reduce(k) for k in kids], info)
        for k in kids:
            if len(find_bad_pairs(k).bad_pairs) >= before:
                raise InternalError("bad-pair allocation did not reduce the bad-pair count")
        return node
    ok, why = verify_well_structured(g)
    if not ok:
        raise InternalError(f"reduction stalled on a piece with {why}")
    return TraceNode(g, "leaf")


def decompose(g):
    """(well-structured leaves, trace root). Leaves are listed in the
    order `reassemble` expects their solutions."""
    if not is_connected(g) or not is_2ec(g):
        raise PreconditionError("decompose needs a 2EC instance")
    root = side_tree(g)
    leaves = [leaf.instance for leaf in root.leaves()]
    for leaf in leaves:
        ok, why = verify_well_structured(leaf)
        if not ok:
            raise InternalError(f"leaf is not well-structured: {why}")
    return leaves, root


def reassemble(trace, leaf_solutions):
    """Union of leaf solutions and forced edges, checked to be a 2-ECSS
    of the root instance."""
    leaves = trace.leaves()
    if len(leaves) != len(leaf_solutions):
        raise PreconditionError("need exactly one solution per leaf")
    for leaf, sol in zip(leaves, leaf_solutions):
        if leaf.instance.n >= 2 and not is_2ec(leaf.instance, sol):
            raise PreconditionError("a leaf solution is not a 2-ECSS of its leaf")
    out = set()
    for sol in leaf_solutions:
        out |= set(sol)
    for node in trace.walk():
        out |= node.forced
    if not is_2ec(trace.instance, out):
        raise InternalError("reassembled edge set is not a 2-ECSS")
    return frozenset(out)


def lower_bound(node, leaf_tau):
    """Composed lower bound: leaves give tau, inner nodes add the cost of
    their forced edges to the sum over children. `leaf_tau` maps id() of a
    leaf node to its tau."""
    if node.kind == "leaf":
        return leaf_tau[id(node)]
    return node.instance.cost(node.forced) + sum(lower_bound(c, leaf_tau) for c in node.children)

"""End to end: decompose, solve every leaf from a minimum 2-edge cover,
reassemble, and account for the 7/4 guarantee.

Each leaf with three or more nodes goes through
cover -> post-processing -> bridge covering -> gluing, and must come
out at most 7/4 of its tau. The root bound is the composed lower bound
of the decomposition tree.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .bridgecover import cover_bridges
from .cover import EdgeCover, min_cost_2edge_cover, postprocess_cover
from .errors import InternalError, PreconditionError
from .glue import glue
from .oracle import verify_2ecss
from .preprocess import decompose, lower_bound, reassemble


@dataclass
class LeafResult:
    n: int
    m: int
    tau: int
    cost: int
    edges: frozenset
    cover_cost: int = 0
    swaps: int = 0
    bridge_log: list = field(default_factory=list)
    glue_log: list = field(default_factory=list)
    audits: int = 0

    def summary(self, full=False):
        d = {"n": self.n, "m": self.m, "tau": self.tau, "cost": self.cost,
             "cover_cost": self.cover_cost, "swaps": self.swaps,
             "bridge_iterations": len(self.bridge_log),
             "glue_iterations": len(self.glue_log),
             "cases": [r["tag"] for r in self.bridge_log] + [r["tag"] for r in self.glue_log],
             "audits": self.audits}
        if full:
            d["bridge_log"] = _plain(self.bridge_log)
            d["glue_log"] = _plain(self.glue_log)
        return d


@dataclass
class SolveReport:
    edges: frozenset
    cost: int
    tau: int
    lb: int
    leaves: list
    trace: dict
    audit: str = "off"

    @property
    def ratio_bound(self):
        return float(Fraction(self.cost, self.lb)) if self.lb else 1.0

    def to_dict(self, full=False):
        return {"cost": self.cost, "tau": self.tau, "lb": self.lb,
                "ratio_bound": self.ratio_bound,
                "guarantee": "cost <= 7/4 lb" if 4 * self.cost <= 7 * self.lb else "violated",
                "audit": {"mode": self.audit, "checks": sum(x.audits for x in self.leaves),
                          "status": "pass" if self.audit != "off" else "skipped"},
                "leaves": [x.summary(full) for x in self.leaves],
                "trace": self.trace if full else None,
                "edges": sorted(self.edges)}


def _plain(obj):
    """JSON-friendly copy of a log record."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_plain(v) for v in items]
    return obj


def solve_leaf(leaf, audit=True, pinned=None):
    """Solve a well-structured leaf; `pinned` fixes the starting cover."""
    if leaf.n == 2:
        ids = leaf.edge_ids()
        c = leaf.cost(ids)
        return LeafResult(2, leaf.m, c, c, frozenset(ids))
    d2 = min_cost_2edge_cover(leaf)
    t = d2.cost
    if pinned is not None:
        d2 = EdgeCover.of(leaf, pinned)
        if not d2.is_cover() or d2.cost != t:
            raise PreconditionError("pinned cover is not a minimum 2-edge cover")
    pp = postprocess_cover(leaf, d2)
    bc = cover_bridges(leaf, pp.edges, audit=audit)
    gl = glue(leaf, bc.edges, bc.ledger, pp.edges, audit=audit)
    cost = leaf.cost(gl.edges)
    if 4 * cost > 7 * t:
        raise InternalError(f"leaf solution costs {cost}, above 7/4 of tau {t}")
    audits = (2 + len(bc.log) + sum(1 for r in bc.log if r.get("fresh")) + len(gl.log)) if audit else 0
    return LeafResult(leaf.n, leaf.m, t, cost, gl.edges, d2.cost, len(pp.swaps),
                      bc.log, gl.log, audits)


def _solve_leaf_args(args):
    return solve_leaf(*args)


def solve(g, audit=True, jobs=1, pinned_cover=None):
    """Full pipeline on a validated 2EC instance."""
    leaves, root = decompose(g)
    nodes = root.leaves()
    if pinned_cover is not None:
        if len(leaves) != 1 or leaves[0].edge_ids() != g.edge_ids():
            raise PreconditionError("a pinned cover needs an instance that is already well-structured")
    work = [(leaf, audit, pinned_cover) for leaf in leaves]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_solve_leaf_args, work))
    else:
        results = [solve_leaf(*w) for w in work]
    edges = reassemble(root, [r.edges for r in results])
    lb = lower_bound(root, {id(nd): r.tau for nd, r in zip(nodes, results)})
    cost = g.cost(edges)
    forced = sum(nd.instance.cost(nd.forced) for nd in root.walk())
    if cost != sum(r.cost for r in results) + forced:
        raise InternalError("root cost differs from leaf costs plus forced edges")
    if not verify_2ecss(g, edges):
        raise InternalError("solution is not a 2-ECSS")
    if 4 * cost > 7 * lb:
        raise InternalError(f"cost {cost} exceeds 7/4 of the lower bound {lb}")
    t = min_cost_2edge_cover(g).cost
    return SolveReport(edges, cost, t, lb, results, root.to_dict(),
                       "full" if audit else "off")

"""Exact ground truth for small instances: opt, tau and feasibility."""

import hashlib
from dataclasses import dataclass, field

from . import kernels
from .errors import CapExceeded
from .multigraph import is_2ec

DEFAULT_CAP = 22


def instance_hash(g):
    h = hashlib.sha256()
    for e in g.edges:
        h.update(f"{e.id}:{e.u}:{e.v}:{e.cost};".encode())
    h.update(",".join(map(str, g.nodes)).encode())
    return h.hexdigest()[:16]


@dataclass
class OptCertificate:
    instance_hash: str
    cost: int
    edges: frozenset
    stats: dict = field(default_factory=dict)


def _check_cap(g, cap):
    cap = DEFAULT_CAP if cap is None else cap
    if g.m > cap:
        raise CapExceeded(f"instance has {g.m} edges, oracle cap is {cap} (raise it with --cap)")


def brute_min_2cover(g, cap=None):
    """Exact tau(G) and one cover attaining it."""
    _check_cap(g, cap)
    res = kernels.min_2cover(g)
    if res is None:
        raise CapExceeded("instance has a node of degree below two; no 2-edge cover exists")
    return res[0], res[1]


def brute_opt_2ecss(g, cap=None, lower=None):
    """Exact opt(G) by branch and bound over unit-edges.

    The search stops as soon as it meets `lower`; by default that is tau,
    which every 2-ECSS costs at least.
    """
    _check_cap(g, cap)
    if lower is None:
        lower = kernels.min_2cover(g)[0] if g.n >= 2 else 0
    res = kernels.min_2ecss(g, lower=lower)
    if res is None:
        raise CapExceeded("instance is not 2-edge-connected")
    cost, edges, nodes = res
    stats = {"search_nodes": nodes, "lower_bound": lower, "backend": kernels.BACKEND}
    return OptCertificate(instance_hash(g), cost, edges, stats)


def verify_2ecss(g, edge_ids):
    """Spanning, connected and bridgeless, with edges drawn from G."""
    edge_ids = set(edge_ids)
    if not all(g.has_edge(i) for i in edge_ids):
        return False
    return is_2ec(g, edge_ids)

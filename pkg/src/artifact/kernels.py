"""Backend selection for the exact search kernels.

The compiled module is used when it imported and the graph fits in a
64-bit edge mask; otherwise the pure-Python twin runs. Both return the
same answers in the same search order.
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # not built
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def _pick(m, backend):
    if backend == "python" or _ckernels is None or m > 64:
        return _pykernels
    return _ckernels


def _encode(g, edge_ids=None):
    """Relabel to 0..n-1 and order unit-edges by endpoint degree, smallest
    first, so forced edges are settled near the root of the search."""
    index = {v: i for i, v in enumerate(g.nodes)}
    edges = g.edges if edge_ids is None else [g.edge(i) for i in sorted(edge_ids)]
    deg = [0] * len(index)
    for e in edges:
        deg[index[e.u]] += 1
        deg[index[e.v]] += 1
    edges = sorted(edges, key=lambda e: (e.cost, min(deg[index[e.u]], deg[index[e.v]]),
                                         deg[index[e.u]] + deg[index[e.v]], e.id))
    eu = [index[e.u] for e in edges]
    ev = [index[e.v] for e in edges]
    cost = [e.cost for e in edges]
    return edges, eu, ev, cost


def _decode(edges, mask):
    return frozenset(e.id for i, e in enumerate(edges) if mask >> i & 1)


def min_2ecss(g, edge_ids=None, lower=0, backend=None):
    """(cost, edge ids, search nodes) of a cheapest 2-ECSS, or None."""
    edges, eu, ev, cost = _encode(g, edge_ids)
    k = _pick(len(edges), backend)
    best, mask, nodes = k.opt_search(g.n, eu, ev, cost, lower)
    if best < 0:
        return None
    return best, _decode(edges, mask), nodes


def min_2cover(g, edge_ids=None, backend=None):
    """(cost, edge ids, search nodes) of a cheapest 2-edge cover, or None."""
    edges, eu, ev, cost = _encode(g, edge_ids)
    k = _pick(len(edges), backend)
    best, mask, nodes = k.cover_search(g.n, eu, ev, cost)
    if best < 0:
        return None
    return best, _decode(edges, mask), nodes

"""Small hand-built instances with known answers, used by the tests and
handy for poking at individual phases.

Instances built from labelled drawings return (instance, names) where
`names` maps each label to its node id.
"""

from .generators import _ids
from .multigraph import validate


def _named(labelled, require_2ec=True):
    names = {}
    for u, v, _c in labelled:
        for x in (u, v):
            names.setdefault(x, len(names) + 1)
    g = validate([(names[u], names[v], c) for u, v, c in labelled], len(names), require_2ec)
    return g, names


def two_bad_pairs():
    """Cycle a1..a8 carrying zero-edges y z (= a8 a2) and v w (= a6 a7)
    with a lobe hung on each, plus a c-triangle with its own zero-edge.
    Bad pairs are {v,w}, {y,z} and {c1,c3}."""
    t = [("a8", "a2", 0), ("a2", "a3", 1), ("a3", "a4", 1), ("a4", "a5", 1),
         ("a5", "a6", 1), ("a6", "a7", 0), ("a7", "a8", 1),
         ("a6", "b1", 1), ("b1", "b2", 1), ("b2", "b3", 1), ("b3", "a7", 1),
         ("c1", "c2", 1), ("c2", "c3", 1), ("c1", "c3", 0), ("a8", "c1", 1),
         ("a2", "c2", 1), ("a2", "c3", 1),
         ("c1", "d1", 1), ("c3", "d2", 1), ("d1", "d2", 1), ("d2", "d3", 1), ("d3", "d1", 1),
         ("a2", "e1", 1), ("a8", "e4", 1), ("e1", "e2", 1), ("e2", "e3", 1),
         ("e3", "e4", 1), ("e4", "e1", 1)]
    return _named(t)


def allocation_example():
    """One bad pair {a,b}; the zero-edge is worth keeping only on the
    small side. opt 8; keeping it on the wrong side gives lb 9."""
    t = [("a", "v2", 1), ("v2", "v3", 1), ("v3", "v4", 1), ("v4", "v5", 1),
         ("v5", "a", 1), ("a", "b", 0), ("b", "w3", 1), ("w3", "w4", 1),
         ("w4", "a", 1), ("v3", "b", 1)]
    return _named(t)


def tau_hat_example():
    """A bp-component with its bad pair {v,w} attached: a square and a
    triangle hang off a path through the zero-edge x y. tau_hat is 13,
    and 10 once v w is contracted."""
    t = [("v", "w", 0), ("x", "y", 0), ("v", "x", 1), ("w", "y", 1),
         ("v", "m", 1), ("m", "y", 1),
         ("a1", "a2", 1), ("a2", "a3", 1), ("a3", "a4", 1), ("a4", "a1", 1),
         ("a1", "v", 1), ("a2", "v", 1), ("a3", "y", 1),
         ("b1", "b2", 1), ("b2", "b3", 1), ("b3", "b1", 1), ("b1", "v", 1), ("b2", "y", 1)]
    return _named(t)


EAR_COVER = [("r", "c01", 1), ("c01", "c02", 1), ("c02", "c03", 1), ("c03", "c04", 1),
             ("c04", "r", 1), ("r", "u", 1),
             ("u", "c05", 1), ("c05", "c06", 1), ("c06", "c07", 1), ("c07", "u", 1),
             ("a1", "a2", 1), ("a2", "a3", 1), ("a3", "a1", 1),
             ("b1", "b2", 1), ("b2", "b3", 1), ("b3", "b4", 1), ("b4", "b1", 1),
             ("c1", "c2", 1), ("c2", "c3", 1), ("c3", "c1", 1),
             ("c3", "c4", 1), ("c4", "c5", 1), ("c5", "c3", 1),
             ("d1", "d2", 1), ("d2", "d3", 1), ("d3", "d1", 1)]
EAR_LINKS = [("c02", "a1", 1), ("a2", "b1", 1), ("a2", "b2", 1), ("b4", "c1", 1),
             ("c5", "c06", 1), ("c5", "c07", 1), ("d1", "c1", 1), ("d3", "c1", 1),
             ("d1", "b3", 1)]


def ear_example():
    """All-unit graph on 24 nodes with a hand-picked (not minimum) cover:
    a 5-cycle R joined to a 4-cycle by the bridge r u, and four more
    components in between. The best ear for r u buys four edges.

    Returns (instance, names, cover edge ids)."""
    g, names = _named(EAR_COVER + EAR_LINKS, require_2ec=False)
    named = [(names[u], names[v], c) for u, v, c in EAR_COVER]
    return g, names, _ids(g, named)


def glue_adjacent_example():
    """Unit 6-cycle plus a triangle x1 x2 x3 (zero-edge x1 x2) hung at b1
    and b4 from x1 and x3, which are adjacent by a unit-edge."""
    t = [(f"b{i}", f"b{i % 6 + 1}", 1) for i in range(1, 7)]
    t += [("x1", "x2", 0), ("x2", "x3", 1), ("x3", "x1", 1), ("b1", "x1", 1), ("b4", "x3", 1)]
    return _named(t)


def glue_diagonal_example():
    """Unit 6-cycle plus a 4-cycle v1..v4 with zero-edges v2 v3 and v4 v1,
    hung at opposite corners v1 and v3, with the diagonal v2 v4."""
    t = [(f"b{i}", f"b{i % 6 + 1}", 1) for i in range(1, 7)]
    t += [("v1", "v2", 1), ("v2", "v3", 0), ("v3", "v4", 1), ("v4", "v1", 0),
          ("b1", "v1", 1), ("b4", "v3", 1), ("v2", "v4", 1)]
    return _named(t)


def glue_ring_example():
    """Unit 5-cycle and two unit triangles, each tied to the next by one
    edge, so the block graph is a triangle through R."""
    t = [(f"r{i}", f"r{i % 5 + 1}", 1) for i in range(1, 6)]
    t += [("p1", "p2", 1), ("p2", "p3", 1), ("p3", "p1", 1),
          ("q1", "q2", 1), ("q2", "q3", 1), ("q3", "q1", 1),
          ("r1", "p1", 1), ("p2", "q1", 1), ("q2", "r3", 1)]
    return _named(t)


def glue_detour_example():
    """The diagonal example without its diagonal: a triangle t1 t2 t3
    hangs on v2 and v4 instead, and the 4-cycle is glued through it."""
    t = [(f"b{i}", f"b{i % 6 + 1}", 1) for i in range(1, 7)]
    t += [("v1", "v2", 1), ("v2", "v3", 0), ("v3", "v4", 1), ("v4", "v1", 0),
          ("b1", "v1", 1), ("b4", "v3", 1),
          ("t1", "t2", 1), ("t2", "t3", 1), ("t3", "t1", 1), ("t1", "v2", 1), ("t2", "v4", 1)]
    return _named(t)


def pendant_swap_example():
    """Six nodes whose minimum cover hangs a cost-2 block on a zero-bridge,
    so post-processing makes one swap."""
    t = [(1, 5, 1), (5, 3, 1), (3, 6, 1), (6, 2, 1), (2, 4, 1), (4, 1, 1),
         (4, 5, 0), (1, 6, 0), (2, 4, 1)]
    return validate(t, 6)


def _bridge_chain(chain, tail):
    """Unit 4-cycle R = r a b c (only r and b leave it), a bridge `chain`
    out of r, a far block T = t0..t3 joined to v1 at t2, and a unit
    triangle x y z tied to b and to the node the ear should land on."""
    t = [("r", "a", 1), ("a", "b", 1), ("b", "c", 1), ("c", "r", 1)]
    t += chain + tail
    t += [("t0", "t1", 1), ("t1", "t2", 1), ("t2", "t3", 1), ("t3", "t0", 1),
          ("x", "y", 1), ("y", "z", 1), ("z", "x", 1), ("y", "b", 1), ("t2", "v1", 1)]
    return t


def chain_case2_example():
    """Bridges r v1 v2 v3 v4 t0 costing 0 1 0 1 1; the only way back from
    R lands on v3, so the prefix is zero, unit, zero."""
    chain = [("r", "v1", 0), ("v1", "v2", 1), ("v2", "v3", 0), ("v3", "v4", 1), ("v4", "t0", 1)]
    return _named(_bridge_chain(chain, [("x", "v3", 1)]))


def chain_case3_unit_example():
    """Bridges r v1 v2 v3 t0 costing 0 1 1 1 with the ear landing on v2;
    a second unit-bridge leaves v2."""
    chain = [("r", "v1", 0), ("v1", "v2", 1), ("v2", "v3", 1), ("v3", "t0", 1)]
    return _named(_bridge_chain(chain, [("x", "v2", 1)]))


def chain_case3_double_example():
    """Bridges r v1 v2 t0 costing 0 1 0 with the ear landing on v2; a
    zero-bridge leaves v2, so a second ear from v1 to T is needed."""
    chain = [("r", "v1", 0), ("v1", "v2", 1), ("v2", "t0", 0)]
    return _named(_bridge_chain(chain, [("x", "v2", 1)]))

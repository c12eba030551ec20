"""Instance families: the two tight families, the four obstructed
families, and seeded random instances.

Node ids are 1-based throughout, matching the instance file format.
"""

import random

from .errors import MapError
from .multigraph import Edge, MapInstance, is_2ec, validate


def _build(triples, n):
    return validate(triples, n)


def gen_prop18(k):
    """Family where opt/tau tends to 7/4.

    A 6-cycle w1..w6 with alternating zero- and unit-edges, plus k copies
    of an 8-node gadget hung from w1 and w4. Nodes 1..6 are w1..w6; gadget
    i uses 6+8(i-1)+1 .. 6+8i for v1..v8.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    t = [(1, 2, 0), (2, 3, 1), (3, 4, 0), (4, 5, 1), (5, 6, 0), (6, 1, 1)]
    gadget_zero = [(1, 4), (2, 3), (5, 8), (6, 7)]
    gadget_unit = [(1, 2), (1, 7), (2, 5), (3, 4), (3, 8), (5, 6), (7, 8)]
    for i in range(k):
        base = 6 + 8 * i
        v = lambda j: base + j
        t += [(v(a), v(b), 0) for a, b in gadget_zero]
        t += [(v(a), v(b), 1) for a, b in gadget_unit]
        t += [(v(1), 1, 1), (v(3), 4, 1)]
    return _build(t, 6 + 8 * k)


def _prop19_nodes(i):
    base = 6 + 8 * (i - 1)
    v = {j: base + j for j in range(1, 5)}
    w = {j: base + 4 + j for j in range(1, 5)}
    return v, w


def gen_prop19(k):
    """Family where the algorithm pays about 7/4 of opt.

    A unit 6-cycle b1..b6 and a chain of k gadgets, each a pair of
    4-cycles (v1..v4 and w1..w4) joined by g = v4w1 and h = v2w4.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    t = [(i, i % 6 + 1, 1) for i in range(1, 7)]
    for i in range(1, k + 1):
        v, w = _prop19_nodes(i)
        t += [(v[1], v[4], 0), (v[2], v[3], 0), (w[1], w[2], 0), (w[3], w[4], 0)]
        t += [(v[1], v[2], 1), (v[3], v[4], 1), (w[1], w[4], 1), (w[2], w[3], 1)]
        t += [(v[4], w[1], 1), (v[2], w[4], 1)]
        if i == 1:
            t += [(1, v[1], 1), (4, v[3], 1)]
        else:
            pv, pw = _prop19_nodes(i - 1)
            t += [(pw[2], v[1], 1), (pw[3], v[3], 1)]
    return _build(t, 6 + 8 * k)


def _ids(g, pairs):
    """Edge ids for (u, v, cost) triples that occur exactly once."""
    out = set()
    for u, v, c in pairs:
        hits = [e.id for e in g.edges_between(u, v) if e.cost == c]
        assert len(hits) == 1, (u, v, c)
        out.add(hits[0])
    return frozenset(out)


def prop19_pinned_cover(g, k):
    """The bridgeless minimum 2-edge cover used in the tightness argument:
    the 6-cycle and both 4-cycles of every gadget."""
    t = [(i, i % 6 + 1, 1) for i in range(1, 7)]
    for i in range(1, k + 1):
        v, w = _prop19_nodes(i)
        t += [(v[1], v[4], 0), (v[2], v[3], 0), (w[1], w[2], 0), (w[3], w[4], 0)]
        t += [(v[1], v[2], 1), (v[3], v[4], 1), (w[1], w[4], 1), (w[2], w[3], 1)]
    return _ids(g, t)


def prop19_certificate(g, k):
    """A 2-ECSS of cost 4k+7: every attachment, g and h edge, every
    zero-edge, the 6-cycle, and w2w3 of the last gadget."""
    ids = set(g.zero_edges())
    ids |= _ids(g, [(i, i % 6 + 1, 1) for i in range(1, 7)])
    for i in range(1, k + 1):
        v, w = _prop19_nodes(i)
        ids |= _ids(g, [(v[4], w[1], 1), (v[2], w[4], 1)])
        if i == 1:
            ids |= _ids(g, [(1, v[1], 1), (4, v[3], 1)])
        else:
            pv, pw = _prop19_nodes(i - 1)
            ids |= _ids(g, [(pw[2], v[1], 1), (pw[3], v[3], 1)])
    _v, w = _prop19_nodes(k)
    ids |= _ids(g, [(w[2], w[3], 1)])
    return frozenset(ids)


def gen_counterexamples(variant, ell):
    """Families that are not well-structured and have opt/tau near 2.

    a: {0,1}-edge-pairs hung from a unit 6-cycle.
    b: 4-cycles with opposite zero-edges hung at opposite corners.
    c: a chain of triangles sharing cut nodes.
    d: like b, but hung at the two ends of a zero-edge (bad pairs).
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if variant == "c":
        t = []
        for i in range(ell):
            u1, u2, u3 = 2 * i + 1, 2 * i + 2, 2 * i + 3
            t += [(u1, u2, 0), (u2, u3, 1), (u3, u1, 1)]
        return _build(t, 2 * ell + 1)
    t = [(i, i % 6 + 1, 1) for i in range(1, 7)]
    n = 6
    for _ in range(ell):
        if variant == "a":
            v, w = n + 1, n + 2
            t += [(v, w, 0), (v, w, 1), (v, 1, 1), (w, 4, 1)]
            n += 2
        elif variant in ("b", "d"):
            u1, u2, u3, u4 = n + 1, n + 2, n + 3, n + 4
            t += [(u1, u2, 0), (u2, u3, 1), (u3, u4, 0), (u4, u1, 1)]
            far = u3 if variant == "b" else u2
            t += [(u1, 1, 1), (far, 4, 1)]
            n += 4
        else:
            raise ValueError(f"unknown variant {variant!r}")
    return _build(t, n)


def gen_random(n, density, seed, max_tries=2000):
    """Seeded random 2EC instance on nodes 1..n.

    Unit-edges appear independently with probability `density`; a random
    perfect-ish matching supplies candidate zero-edges, half of which are
    used, sometimes alongside an existing unit copy. A few unit-edges get
    a parallel twin. Samples are redrawn until 2-edge-connected.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    rng = random.Random(seed)
    for _ in range(max_tries):
        unit = {}
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                if rng.random() < density:
                    unit[(u, v)] = 1
        order = list(range(1, n + 1))
        rng.shuffle(order)
        zero = []
        for i in range(0, n - 1, 2):
            if rng.random() < 0.5:
                continue
            pair = tuple(sorted((order[i], order[i + 1])))
            zero.append(pair)
            if pair in unit and rng.random() < 0.5:
                del unit[pair]
        t = [(u, v, 1) for (u, v) in unit]
        t += [(u, v, 1) for (u, v) in unit if rng.random() < 0.08]
        t += [(u, v, 0) for (u, v) in zero]
        rng.shuffle(t)
        g = MapInstance(range(1, n + 1), [Edge(i, u, v, c) for i, (u, v, c) in enumerate(t)])
        if is_2ec(g):
            return validate(t, n)
    raise MapError(f"no 2-edge-connected sample after {max_tries} tries")


def gen_ring(n, seed, chords=None):
    """Seeded instance built to leave bridges in its 2-edge covers: a unit
    Hamiltonian cycle in random order, a zero matching on most nodes, and
    a few unit chords."""
    if n < 4:
        raise ValueError("n must be >= 4")
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    t = [(order[i], order[(i + 1) % n], 1) for i in range(n)]
    pairing = list(range(1, n + 1))
    rng.shuffle(pairing)
    for i in range(0, n - 1, 2):
        if rng.random() < 0.8:
            t.append((pairing[i], pairing[i + 1], 0))
    for _ in range(rng.randint(0, n // 2) if chords is None else chords):
        a, b = rng.sample(range(1, n + 1), 2)
        t.append((a, b, 1))
    return validate(t, n)


def _random_piece(rng, n, density, offset):
    """A small random 2EC unit graph on offset+1..offset+n (a Hamiltonian
    cycle plus chords), returned as triples."""
    nodes = list(range(offset + 1, offset + n + 1))
    rng.shuffle(nodes)
    t = [(nodes[i], nodes[(i + 1) % n], 1) for i in range(n)] if n >= 3 else []
    for i in range(n):
        for j in range(i + 2, n):
            if (i, j) != (0, n - 1) and rng.random() < density:
                t.append((nodes[i], nodes[j], 1))
    return t


def gen_planted(n_max, seed):
    """Seeded instance with at most `n_max` nodes containing deliberate
    obstructions: {0,1}-edge-pairs (essential or not), redundant 4-cycles,
    cut nodes and bad pairs, grafted onto random cyclic pieces."""
    rng = random.Random(seed)
    for _ in range(500):
        t = []
        size = rng.randint(3, max(3, min(5, n_max - 2)))
        t += _random_piece(rng, size, 0.3, 0)
        n = size
        zero_at = set()

        def free_node(pool):
            cands = [x for x in pool if x not in zero_at]
            return rng.choice(cands) if cands else None

        kinds = ["pair", "pair_essential", "cycle4", "cutnode", "badpair", "zero"]
        for _k in range(rng.randint(1, 3)):
            kind = rng.choice(kinds)
            old = list(range(1, n + 1))
            if kind == "zero":
                a = free_node(old)
                cands = [x for x in old if x != a and x not in zero_at]
                if a is None or not cands:
                    continue
                b = rng.choice(cands)
                t.append((a, b, 0))
                zero_at |= {a, b}
            elif kind == "pair":
                if n + 2 > n_max:
                    continue
                v, w = n + 1, n + 2
                a, b = rng.sample(old, 2)
                t += [(v, w, 0), (v, w, 1), (v, a, 1), (w, b, 1)]
                zero_at |= {v, w}
                n += 2
            elif kind == "pair_essential":
                size2 = rng.randint(2, 3)
                if n + size2 > n_max:
                    continue
                a = free_node(old)
                if a is None:
                    continue
                if size2 == 2:
                    t += [(n + 1, n + 2, 1), (n + 1, n + 2, 1)]
                else:
                    t += _random_piece(rng, size2, 0.0, n)
                b = n + 1
                t += [(a, b, 0), (a, b, 1)]
                zero_at |= {a, b}
                n += size2
            elif kind == "cycle4":
                if n + 4 > n_max:
                    continue
                u1, u2, u3, u4 = n + 1, n + 2, n + 3, n + 4
                t += [(u1, u2, 0), (u2, u3, 1), (u3, u4, 0), (u4, u1, 1)]
                a, b = (rng.sample(old, 2) if len(old) >= 2 else (old[0], old[0]))
                t += [(u1, a, 1), (u3, b, 1)]
                zero_at |= {u1, u2, u3, u4}
                n += 4
            elif kind == "cutnode":
                size2 = rng.randint(3, 4)
                if n + size2 - 1 > n_max:
                    continue
                piece = _random_piece(rng, size2, 0.4, n)
                hub = rng.choice(old)
                # identify node n+1 of the new piece with an old node
                piece = [(hub if u == n + 1 else u - (1 if u > n + 1 else 0),
                          hub if v == n + 1 else v - (1 if v > n + 1 else 0), c)
                         for u, v, c in piece]
                t += piece
                n += size2 - 1
            elif kind == "badpair":
                size2 = rng.randint(1, 3)
                if n + size2 > n_max:
                    continue
                v = free_node(old)
                if v is None:
                    continue
                cands = [x for x in old if x != v and x not in zero_at]
                if not cands:
                    continue
                w = rng.choice(cands)
                t.append((v, w, 0))
                zero_at |= {v, w}
                new = list(range(n + 1, n + size2 + 1))
                if size2 >= 3:
                    t += _random_piece(rng, size2, 0.0, n)
                elif size2 == 2:
                    t += [(new[0], new[1], 1)]
                t += [(new[0], v, 1), (new[-1], w, 1)]
                if size2 == 1:
                    t += [(new[0], w, 1)]
                    t = t[:-2] + [(new[0], v, 1), (new[0], w, 1)]
                n += size2
        try:
            return validate(t, n)
        except MapError:
            continue
    raise MapError("could not plant obstructions")

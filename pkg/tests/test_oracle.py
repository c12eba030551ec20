import pytest

from artifact import kernels
from artifact.errors import CapExceeded
from artifact.generators import gen_prop18, gen_prop19, gen_random
from artifact.multigraph import validate
from artifact.oracle import (brute_min_2cover, brute_opt_2ecss, instance_hash,
                             verify_2ecss)

# brute-force values, frozen
FROZEN = {("prop18", 1): (14, 19, 7, 10), ("prop18", 2): (22, 32, 11, 17),
          ("prop19", 1): (14, 18, 10, 11), ("prop19", 2): (22, 30, 14, 15)}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_family_values(key):
    fam, k = key
    g = (gen_prop18 if fam == "prop18" else gen_prop19)(k)
    n, m, t, opt = FROZEN[key]
    assert (g.n, g.m) == (n, m)
    assert brute_min_2cover(g, 64)[0] == t
    cert = brute_opt_2ecss(g, 64)
    assert cert.cost == opt
    assert verify_2ecss(g, cert.edges) and g.cost(cert.edges) == opt


def test_cycle_and_k4():
    c5 = validate([(i, i % 5 + 1, 1) for i in range(1, 6)])
    assert brute_opt_2ecss(c5).cost == 5
    k4 = validate([(a, b, 1) for a in range(1, 5) for b in range(a + 1, 5)])
    assert brute_opt_2ecss(k4).cost == 4
    assert brute_min_2cover(k4)[0] == 4


def test_zero_edges_are_free():
    g = validate([(1, 2, 0), (2, 3, 1), (3, 4, 0), (4, 1, 1), (1, 3, 1)])
    assert brute_opt_2ecss(g).cost == 2


def test_cap_is_enforced():
    g = gen_prop18(2)
    with pytest.raises(CapExceeded):
        brute_opt_2ecss(g)
    with pytest.raises(CapExceeded):
        brute_min_2cover(g, cap=10)


def test_verify_rejects_non_spanning_and_bridged():
    g = validate([(1, 2, 1), (2, 3, 1), (3, 1, 1), (3, 4, 1), (4, 1, 1)])
    assert verify_2ecss(g, g.edge_ids())
    assert not verify_2ecss(g, [0, 1, 2])
    assert not verify_2ecss(g, [0, 1, 2, 3])


def test_hash_is_stable():
    assert instance_hash(gen_random(6, 0.5, 1)) == "63df36c6c3ef9753"


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled kernels not built")
def test_backends_agree():
    for seed in range(30):
        g = gen_random(8, 0.4, seed)
        for fn in (kernels.min_2cover, kernels.min_2ecss):
            a = fn(g, backend="python")
            b = fn(g, backend="cython")
            assert a[0] == b[0] and a[1] == b[1]


def test_python_backend_alone():
    g = gen_prop19(1)
    assert kernels.min_2cover(g, backend="python")[0] == 10
    assert kernels.min_2ecss(g, lower=10, backend="python")[0] == 11

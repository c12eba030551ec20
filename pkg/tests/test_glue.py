import pytest

from artifact import fixtures
from artifact.bridgecover import cover_bridges
from artifact.cover import min_cost_2edge_cover, postprocess_cover
from artifact.errors import InternalError
from artifact.generators import gen_prop19, prop19_pinned_cover
from artifact.glue import BlockGraph, glue, plan_iteration
from artifact.ledger import CreditLedger
from artifact.multigraph import is_2ec
from artifact.oracle import brute_opt_2ecss


def _glued(g, cov=None):
    cov = cov if cov is not None else postprocess_cover(g, min_cost_2edge_cover(g)).edges
    bc = cover_bridges(g, cov)
    return glue(g, bc.edges, bc.ledger, cov)


@pytest.mark.parametrize("make, tag, cost", [
    (fixtures.glue_adjacent_example, "glue-case1", 9),
    (fixtures.glue_diagonal_example, "glue-case2a", 9),
    (fixtures.glue_detour_example, "glue-case2b", 14),
    (fixtures.glue_ring_example, "glue-cycle", 14),
])
def test_glue_cases(make, tag, cost):
    g, _names = make()
    res = _glued(g)
    assert [x["tag"] for x in res.log] == [tag]
    assert is_2ec(g, res.edges) and g.cost(res.edges) == cost


def test_small_glue_fixtures_are_optimal():
    for make in (fixtures.glue_adjacent_example, fixtures.glue_diagonal_example):
        g, _ = make()
        assert g.cost(_glued(g).edges) == brute_opt_2ecss(g).cost


def test_case1_sells_the_edge_between_the_landing_points():
    g, names = fixtures.glue_adjacent_example()
    rec = _glued(g).log[0]
    assert [set(g.edge(e).pair()) for e in rec["sold"]] == [{names["x3"], names["x1"]}]


def test_detour_path_avoids_the_root():
    g, names = fixtures.glue_detour_example()
    d = _glued(g).log[0]["detail"]
    assert d["x"] == names["v2"]
    assert not {names[f"b{i}"] for i in range(1, 7)} & set(d["path"])


def test_block_graph_of_the_ring():
    g, _ = fixtures.glue_ring_example()
    H = postprocess_cover(g, min_cost_2edge_cover(g)).edges
    bg = BlockGraph(g, H)
    r = bg.block_of[min(g.nodes)]
    assert len(bg.shortest_cycle(r)) == 2


def test_prop19_pinned_glue():
    for k in (1, 2):
        g = gen_prop19(k)
        res = _glued(g, prop19_pinned_cover(g, k))
        assert g.cost(res.edges) == 7 * k + 6


def test_glue_refuses_bridged_cover():
    g, _names, cov = fixtures.ear_example()
    with pytest.raises(InternalError, match="bridgeless"):
        glue(g, cov, CreditLedger(g, cov), audit=False)

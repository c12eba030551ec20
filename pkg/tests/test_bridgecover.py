import pytest

from artifact import fixtures
from artifact.bridgecover import (classify_prefix, cover_bridges, find_ear, init_credits,
                                  select_root)
from artifact.cover import min_cost_2edge_cover, postprocess_cover
from artifact.errors import ImpossibleCase
from artifact.multigraph import connectivity_profile, validate


def _start(g):
    return postprocess_cover(g, min_cost_2edge_cover(g)).edges


def test_ear_fixture_buys_four_edges():
    g, names, cov = fixtures.ear_example()
    H, led = init_credits(g, cov)
    prof = connectivity_profile(g, H)
    R, ru, rec = select_root(g, H, led, prof)
    assert g.edge(ru).pair() == (names["r"], names["u"])
    r = names["r"]
    plan = find_ear(g, H, prof, R, ru, r)
    inv = {v: k for k, v in names.items()}
    assert [inv[x] for x in plan.nodes] == ["c06", "c5", "c3", "c1", "b4", "b1", "a2", "a1", "c02"]
    assert len(plan.non_h(H)) == 4
    assert inv[plan.a0] == "c06"
    res = cover_bridges(g, cov)
    assert [x["tag"] for x in res.log] == ["white-node"]
    assert len(res.log[0]["bought"]) == 4


@pytest.mark.parametrize("make, tags", [
    (fixtures.chain_case2_example, ["case2", "white-node"]),
    (fixtures.chain_case3_unit_example, ["case3-unit", "white-node"]),
    (fixtures.chain_case3_double_example, ["case3-double"]),
])
def test_rare_prefix_cases(make, tags):
    g, _names = make()
    cov = _start(g)
    res = cover_bridges(g, cov)
    assert [x["tag"] for x in res.log] == tags
    assert connectivity_profile(g, res.edges).bridges == frozenset()


def test_double_case_sells_the_unit_bridge():
    g, names = fixtures.chain_case3_double_example()
    res = cover_bridges(g, _start(g))
    sold = res.log[0]["sold"]
    assert [g.edge(e).pair() for e in sold] == [(names["v1"], names["v2"])]


def _path_graph(costs):
    """A bare path 1..k+1 whose edge costs are `costs`, for prefix checks."""
    t = [(i + 1, i + 2, c) for i, c in enumerate(costs)]
    g = validate(t, len(costs) + 1, require_2ec=False)
    return g, connectivity_profile(g), list(range(1, len(costs) + 2)), [e.id for e in g.edges]


@pytest.mark.parametrize("costs, tag", [
    ([1, 1], "cost>=2"),
    ([0, 1, 0], "case2"),
    ([0, 1], "case3-double"),
])
def test_classify_prefix(costs, tag):
    g, prof, nodes, edges = _path_graph(costs)
    assert classify_prefix(g, prof, nodes, edges) == tag


@pytest.mark.parametrize("costs, tag", [([1, 0], "case1"), ([0], "prefix"), ([1], "prefix")])
def test_impossible_prefixes_raise(costs, tag):
    g, prof, nodes, edges = _path_graph(costs)
    with pytest.raises(ImpossibleCase) as ex:
        classify_prefix(g, prof, nodes, edges)
    assert ex.value.tag == tag


def test_prefix_through_a_block_is_white():
    g = validate([(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 2, 1)], require_2ec=False)
    prof = connectivity_profile(g)
    assert classify_prefix(g, prof, [1, 2], [0]) == "white-node"


def test_bridgeless_cover_needs_no_iterations():
    g, _ = fixtures.glue_adjacent_example()
    res = cover_bridges(g, _start(g))
    assert res.log == []

import json

import pytest

from artifact import fixtures
from artifact.errors import PreconditionError
from artifact.generators import gen_prop18, gen_prop19, gen_random, prop19_pinned_cover
from artifact.multigraph import validate
from artifact.oracle import brute_opt_2ecss, verify_2ecss
from artifact.pipeline import solve, solve_leaf


def test_unit_cycle_is_solved_exactly():
    g = validate([(i, i % 7 + 1, 1) for i in range(1, 8)])
    rep = solve(g)
    assert rep.cost == rep.lb == 7 and rep.ratio_bound == 1.0


def test_prop19_pinned_cost():
    g = gen_prop19(2)
    rep = solve(g, pinned_cover=prop19_pinned_cover(g, 2))
    assert rep.cost == 20 and rep.tau == 14


def test_pinned_cover_must_be_minimum():
    g = gen_prop19(1)
    with pytest.raises(PreconditionError):
        solve(g, pinned_cover=g.edge_ids())


def test_pinned_cover_needs_a_single_leaf():
    g, _ = fixtures.allocation_example()
    with pytest.raises(PreconditionError):
        solve(g, pinned_cover=g.edge_ids())


def test_report_and_guarantee():
    g = gen_prop18(2)
    rep = solve(g)
    assert verify_2ecss(g, rep.edges)
    assert 4 * rep.cost <= 7 * rep.lb
    d = rep.to_dict(full=True)
    json.dumps(d)
    assert d["guarantee"] == "cost <= 7/4 lb" and d["trace"]["kind"]
    assert rep.to_dict()["trace"] is None


def test_two_node_leaf_takes_both_edges():
    g = validate([(1, 2, 1), (1, 2, 0)])
    res = solve_leaf(g)
    assert res.cost == 1 and len(res.edges) == 2


def test_jobs_give_the_same_answer():
    g, _ = fixtures.two_bad_pairs()
    a, b = solve(g), solve(g, jobs=2)
    assert a.edges == b.edges and a.cost == b.cost == 21


@pytest.mark.parametrize("seed", range(12))
def test_random_instances_within_bound(seed):
    g = gen_random(9, 0.35, seed)
    rep = solve(g)
    assert 4 * rep.cost <= 7 * brute_opt_2ecss(g, 64).cost

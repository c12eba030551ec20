from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from artifact.cover import min_cost_2edge_cover
from artifact.generators import gen_planted, gen_random, gen_ring
from artifact.io import format_instance, parse_instance
from artifact.oracle import brute_min_2cover, brute_opt_2ecss
from artifact.pipeline import solve
from artifact.preprocess import decompose, verify_well_structured

instances = st.one_of(
    st.builds(gen_random, st.integers(4, 9), st.sampled_from([0.3, 0.4, 0.5]), st.integers(0, 10**6)),
    st.builds(gen_ring, st.integers(6, 11), st.integers(0, 10**6)),
    st.builds(gen_planted, st.integers(6, 10), st.integers(0, 10**6)),
)
common = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@common
@given(instances)
def test_solution_is_feasible_and_within_seven_quarters(g):
    rep = solve(g)
    opt = brute_opt_2ecss(g, 64).cost
    assert rep.lb <= opt <= rep.cost
    assert 4 * rep.cost <= 7 * opt


@common
@given(instances)
def test_cover_is_minimum(g):
    assert min_cost_2edge_cover(g).cost == brute_min_2cover(g, 64)[0]


@common
@given(instances)
def test_leaves_are_well_structured(g):
    assert all(verify_well_structured(x)[0] for x in decompose(g)[0])


@common
@given(instances)
def test_text_round_trip(g):
    assert parse_instance(format_instance(g)) == g

import pytest

from artifact.cover import min_cost_2edge_cover
from artifact.errors import CreditError
from artifact.generators import gen_prop19, prop19_pinned_cover
from artifact.ledger import POOL, RETAIN, WORK, CreditLedger, audit_credit_invariant
from artifact.multigraph import validate


def square_with_chord():
    return validate([(1, 2, 1), (2, 3, 1), (3, 4, 0), (4, 1, 1), (1, 3, 1)])


def test_initial_credit_per_unit_edge():
    g = square_with_chord()
    led = CreditLedger(g, [0, 1, 2, 3])
    assert led.u0 == 3
    assert led.credit([0, 1, 2, 3]) == 3 * WORK
    assert led.total() == 7 * 3
    assert 2 not in led.working


def test_take_draws_in_order_and_rolls_back():
    g = square_with_chord()
    led = CreditLedger(g, [0, 1, 2, 3])
    led.working[0] = 1
    drawn = led.take(4, [[3, 0], [1]])
    assert drawn == [(0, 1), (3, 3)]
    before = dict(led.working)
    with pytest.raises(CreditError, match="short 1"):
        led.take(4, [[1], POOL])
    assert led.working == before


def test_buy_sell_and_conservation():
    g = square_with_chord()
    H = {0, 1, 2, 3}
    led = CreditLedger(g, H)
    led.buy(4, [[0, 1, 3]])
    H.add(4)
    assert led.retained[4] == RETAIN and led.spent == RETAIN
    assert led.total() == 7 * led.u0
    assert led.working[0] == 0      # drained first by the purchase
    got = led.sell(0)
    H.discard(0)
    assert got == RETAIN and led.pool == got
    assert led.released == RETAIN
    led.deposit(H)
    assert led.pool == 0
    assert sum(led.working.values()) == WORK * led.u0 + led.released - led.spent
    assert not [b for b in audit_credit_invariant(g, H, led, [0, 1, 2, 3], 1, check_bridges=False)
                if "conservation" in b or "negative" in b]


def test_zero_edges_are_bought_for_free():
    g = square_with_chord()
    led = CreditLedger(g, [0, 1, 3, 4])
    assert led.buy(2, [POOL]) == [] and led.spent == 0


def test_audit_catches_tampering():
    g = gen_prop19(1)
    cov = prop19_pinned_cover(g, 1)
    led = CreditLedger(g, cov)
    assert audit_credit_invariant(g, cov, led, cov) == []
    eid = min(led.working)
    led.working[eid] -= 1
    assert any("conservation" in b for b in audit_credit_invariant(g, cov, led, cov))


def test_bridge_drawn_in_two_iterations_is_flagged():
    g = gen_prop19(1)
    cov = min_cost_2edge_cover(g).edges
    led = CreditLedger(g, cov)
    b = min(led.working)
    for _ in range(2):
        led.begin_iteration([b])
        led.take(1, [[b]])
    assert any("2 iterations" in x for x in audit_credit_invariant(g, cov, led, cov))

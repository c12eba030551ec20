"""The eight acceptance criteria, each at its stated tolerance.

Every criterion records one PASS/FAIL line; pytest prints them in the
terminal summary, and `python3 tests/test_acceptance.py` prints them
directly.
"""

import time

import pytest

from artifact import fixtures
from artifact.bridgecover import cover_bridges
from artifact.cover import _bad_zero_bridges, min_cost_2edge_cover, postprocess_cover
from artifact.errors import ImpossibleCase
from artifact.generators import (gen_counterexamples, gen_prop18, gen_prop19,
                                 prop19_certificate, prop19_pinned_cover)
from artifact.glue import glue
from artifact.multigraph import connectivity_profile, is_2nc
from artifact.oracle import brute_min_2cover, brute_opt_2ecss, verify_2ecss
from artifact.pipeline import solve
from artifact.preprocess import decompose, reassemble, verify_well_structured
from corpus import fuzz_corpus, planted_corpus, ring_corpus, small_corpus

CAP = 64
RESULTS = {}
# hand-built instances reaching the rarer bridge-covering cases
CHAIN_FIXTURES = [fixtures.chain_case2_example()[0], fixtures.chain_case3_unit_example()[0],
                  fixtures.chain_case3_double_example()[0]]


def record(no, ok, detail):
    RESULTS[no] = f"ACCEPTANCE {no}: {'PASS' if ok else 'FAIL'}  {detail}"
    return ok


def criterion_1():
    t0 = time.perf_counter()
    taus = {k: min_cost_2edge_cover(gen_prop18(k)).cost for k in range(1, 6)}
    good = all(taus[k] == 4 * k + 3 for k in taus)
    opts = {}
    for k in (1, 2):
        g = gen_prop18(k)
        opts[k] = brute_opt_2ecss(g, CAP).cost
        good &= brute_min_2cover(g, CAP)[0] == taus[k]
        good &= opts[k] >= 7 * k + 3
    dt = time.perf_counter() - t0
    good &= dt < 60
    ratios = ", ".join(f"k={k} opt/tau={opts[k]}/{taus[k]}" for k in opts)
    return record(1, good, f"tau={[taus[k] for k in sorted(taus)]}; {ratios}; {dt:.1f}s")


def criterion_2():
    t0 = time.perf_counter()
    good, parts = True, []
    for k in range(1, 5):
        g = gen_prop19(k)
        rep = solve(g, pinned_cover=prop19_pinned_cover(g, k))
        cert = prop19_certificate(g, k)
        good &= rep.cost == 7 * k + 6
        good &= verify_2ecss(g, cert) and g.cost(cert) == 4 * k + 7
        if k <= 2:
            good &= brute_opt_2ecss(g, CAP).cost <= 4 * k + 7
        parts.append(f"k={k} cost={rep.cost} ratio={rep.cost / (4 * k + 7):.3f}")
    dt = time.perf_counter() - t0
    good &= dt < 60
    return record(2, good, f"{'; '.join(parts)}; {dt:.1f}s")


def criterion_3():
    t0 = time.perf_counter()
    bad, worst = [], 0.0
    for i, g in enumerate(fuzz_corpus()):
        rep = solve(g)
        opt = brute_opt_2ecss(g, CAP).cost
        if not (4 * rep.cost <= 7 * opt and 4 * rep.cost <= 7 * rep.lb
                and verify_2ecss(g, rep.edges)):
            bad.append(i)
        worst = max(worst, rep.cost / opt)
    dt = time.perf_counter() - t0
    ok = not bad and dt < 600
    return record(3, ok, f"500 instances, worst cost/opt={worst:.3f}, violations={bad[:5]}; {dt:.1f}s")


def _audited_fixture_runs():
    """Fixtures whose starting cover is pinned, run phase by phase."""
    g, _names, cov = fixtures.ear_example()
    bc = cover_bridges(g, cov)
    gl = glue(g, bc.edges, bc.ledger, cov)
    yield gl.ledger, len(bc.log) + len(gl.log)
    for k in range(1, 5):
        g = gen_prop19(k)
        cov = prop19_pinned_cover(g, k)
        bc = cover_bridges(g, cov)
        gl = glue(g, bc.edges, bc.ledger, cov)
        yield gl.ledger, len(bc.log) + len(gl.log)


def criterion_4():
    pool = list(fuzz_corpus()) + list(ring_corpus())
    pool += [fixtures.two_bad_pairs()[0], fixtures.allocation_example()[0],
             fixtures.tau_hat_example()[0], fixtures.glue_adjacent_example()[0],
             fixtures.glue_diagonal_example()[0], fixtures.pendant_swap_example(),
             fixtures.glue_ring_example()[0], fixtures.glue_detour_example()[0],
             gen_prop18(1), gen_prop18(2)] + CHAIN_FIXTURES
    audits = iterations = 0
    failures = []
    for i, g in enumerate(pool):
        try:
            rep = solve(g, audit=True)
        except Exception as ex:  # any audit failure or credit shortfall
            failures.append((i, str(ex)[:80]))
            continue
        audits += sum(x.audits for x in rep.leaves)
        iterations += sum(len(x.bridge_log) for x in rep.leaves)
    for ledger, its in _audited_fixture_runs():
        iterations += its
        if ledger.total() != 7 * ledger.u0 or ledger.pool < 0 or min(ledger.working.values(), default=0) < 0:
            failures.append(("fixture", "conservation"))
    return record(4, not failures,
                  f"{len(pool)} instances + pinned fixtures, {audits} audits, "
                  f"{iterations} bridge-covering iterations, failures={failures[:3]}")


def criterion_5():
    t0 = time.perf_counter()
    mism, pp_bad, checked = [], [], 0
    for i, g in enumerate(small_corpus()):
        c = min_cost_2edge_cover(g)
        if c.cost != brute_min_2cover(g, CAP)[0]:
            mism.append(i)
        pieces = [g] if is_2nc(g) else []
        pieces += [leaf for leaf in decompose(g)[0] if leaf.n >= 3]
        for h in pieces:
            d2 = min_cost_2edge_cover(h)
            pp = postprocess_cover(h, d2)
            checked += 1
            if pp.cost != d2.cost or _bad_zero_bridges(h, connectivity_profile(h, pp.edges)):
                pp_bad.append(i)
    dt = time.perf_counter() - t0
    ok = not mism and not pp_bad and dt < 120
    return record(5, ok, f"200 instances (m<=12), cover mismatches={mism[:5]}, "
                         f"post-processed {checked} pieces, bad={pp_bad[:5]}; {dt:.1f}s")


def criterion_6():
    bad_leaf, bad_opt = [], []
    for i, g in enumerate(planted_corpus()):
        leaves, root = decompose(g)
        sols = []
        for leaf in leaves:
            if not verify_well_structured(leaf)[0]:
                bad_leaf.append(i)
            sols.append(leaf.edge_ids() if leaf.n == 2 else brute_opt_2ecss(leaf, CAP).edges)
        if g.cost(reassemble(root, sols)) != brute_opt_2ecss(g, CAP).cost:
            bad_opt.append(i)
    return record(6, not bad_leaf and not bad_opt,
                  f"200 planted instances, non-well-structured leaves={bad_leaf[:5]}, "
                  f"opt mismatches={bad_opt[:5]}")


# (tau, opt) bounds at l=2 next to the exact values found by brute force
CEX_BOUNDS = {"a": (lambda t, o: t <= 8 and o >= 4, (8, 10)),
              "b": (lambda t, o: t <= 10 and o >= 8, (10, 14)),
              "c": (lambda t, o: t == 4 and o == 4, (4, 4)),
              "d": (lambda t, o: t <= 10 and o >= 8, (10, 14))}


def criterion_7():
    good, parts = True, []
    for v, (bound, exact) in CEX_BOUNDS.items():
        g = gen_counterexamples(v, 2)
        t = brute_min_2cover(g, CAP)[0]
        o = brute_opt_2ecss(g, CAP).cost
        good &= bound(t, o) and (t, o) == exact and min_cost_2edge_cover(g).cost == t
        leaves, _root = decompose(g)
        good &= all(verify_well_structured(x)[0] for x in leaves)
        parts.append(f"({v}) tau={t} opt={o}")
    # (a) has 10 nodes and 2 zero-edges, so opt >= 8 > 2l; the bound opt >= 2l is what holds
    return record(7, good, "; ".join(parts) + "; (a) checked as opt >= 2l, equality 2l is impossible")


def criterion_8():
    tags, case1 = {}, 0
    pool = list(fuzz_corpus()) + list(ring_corpus()) + list(planted_corpus()) + CHAIN_FIXTURES
    for g in pool:
        for leaf in decompose(g)[0]:
            if leaf.n < 3:
                continue
            pp = postprocess_cover(leaf, min_cost_2edge_cover(leaf))
            try:
                res = cover_bridges(leaf, pp.edges, audit=False)
            except ImpossibleCase as ex:
                if ex.tag == "case1":
                    case1 += 1
                    continue
                raise
            for r in res.log:
                tags[r["tag"]] = tags.get(r["tag"], 0) + 1
    return record(8, case1 == 0, f"{len(pool)} instances, case1 occurrences={case1}, tags={tags}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("no", range(1, 9))
def test_acceptance(no):
    assert CRITERIA[no - 1](), RESULTS[no]


if __name__ == "__main__":
    for fn in CRITERIA:
        fn()
    for no in sorted(RESULTS):
        print(RESULTS[no])

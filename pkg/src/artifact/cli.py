"""Command-line front end.

    artifact solve  INSTANCE [--out SOL] [--audit off|summary|full] [--jobs N] [--cover SOL]
    artifact gen    FAMILY [--k K] [--l L] [--n N] [--density D] [--seed S] [--out FILE]
    artifact verify INSTANCE SOLUTION
    artifact oracle INSTANCE [--cap M]
    artifact audit  INSTANCE

Exit codes: 0 success, 1 verification failed, 2 bad or infeasible input,
3 internal or audit failure.
"""

import argparse
import json
import sys

from . import generators as gen
from .errors import InternalError, MapError
from .io import (format_instance, format_solution, match_solution, read_instance,
                 read_solution)
from .oracle import DEFAULT_CAP, brute_min_2cover, brute_opt_2ecss, verify_2ecss
from .pipeline import solve

FAMILIES = ("prop18", "prop19", "cex-a", "cex-b", "cex-c", "cex-d", "random", "ring", "planted")


def _emit(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def cmd_solve(args):
    g = read_instance(args.instance)
    pinned = None
    if args.cover:
        _n, _c, triples = read_solution(args.cover)
        pinned, missing = match_solution(g, triples)
        if missing:
            raise MapError(f"cover edge {missing[0]} is not in the instance")
    rep = solve(g, audit=args.audit != "off", jobs=args.jobs, pinned_cover=pinned)
    rep.audit = args.audit
    if args.out:
        _emit(format_solution(g, rep.edges), args.out)
    d = rep.to_dict(full=args.audit == "full")
    if d["trace"] is None:
        del d["trace"]
    d["solution"] = [list(g.edge(i)[1:]) for i in sorted(rep.edges)]
    print(json.dumps(d, indent=2))
    return 0


def _generate(args):
    fam = args.family
    if fam == "prop18":
        return gen.gen_prop18(args.k), f"prop18 k={args.k}"
    if fam == "prop19":
        return gen.gen_prop19(args.k), f"prop19 k={args.k}"
    if fam.startswith("cex-"):
        return gen.gen_counterexamples(fam[-1], args.l), f"counterexample {fam[-1]} l={args.l}"
    if fam == "random":
        return gen.gen_random(args.n, args.density, args.seed), \
            f"random n={args.n} density={args.density} seed={args.seed}"
    if fam == "ring":
        return gen.gen_ring(args.n, args.seed), f"ring n={args.n} seed={args.seed}"
    return gen.gen_planted(args.n, args.seed), f"planted n<={args.n} seed={args.seed}"


def cmd_gen(args):
    g, note = _generate(args)
    _emit(format_instance(g, note), args.out)
    if args.cover_out:
        if args.family != "prop19":
            raise MapError("--cover-out is only defined for prop19")
        _emit(format_solution(g, gen.prop19_pinned_cover(g, args.k)), args.cover_out)
    return 0


def cmd_verify(args):
    g = read_instance(args.instance)
    n, cost, triples = read_solution(args.solution)
    if n != g.n:
        print(f"solution is for {n} nodes, instance has {g.n}", file=sys.stderr)
        return 1
    ids, missing = match_solution(g, triples)
    if missing:
        print(f"solution edge {missing[0]} is not in the instance", file=sys.stderr)
        return 1
    real = g.cost(ids)
    if real != cost:
        print(f"declared cost {cost} but the edges cost {real}", file=sys.stderr)
        return 1
    if not verify_2ecss(g, ids):
        print("solution is not a 2-edge-connected spanning subgraph", file=sys.stderr)
        return 1
    print(f"ok: feasible, cost {real}")
    return 0


def cmd_oracle(args):
    g = read_instance(args.instance)
    t, cover = brute_min_2cover(g, args.cap)
    cert = brute_opt_2ecss(g, args.cap, lower=t)
    print(f"opt {cert.cost}")
    print(f"tau {t}")
    print(f"opt_edges {' '.join(map(str, sorted(cert.edges)))}")
    print(f"tau_edges {' '.join(map(str, sorted(cover)))}")
    print(f"hash {cert.instance_hash} search_nodes {cert.stats['search_nodes']}")
    return 0


def cmd_audit(args):
    g = read_instance(args.instance)
    rep = solve(g, audit=True, jobs=args.jobs)
    for i, leaf in enumerate(rep.leaves):
        s = leaf.summary()
        print(f"leaf {i}: n={s['n']} tau={s['tau']} cost={s['cost']} "
              f"audits={s['audits']} cases={','.join(s['cases']) or '-'}")
    print(f"PASS cost={rep.cost} lb={rep.lb}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="artifact", description="7/4-approximation for MAP")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("solve", help="solve an instance and print a JSON report")
    s.add_argument("instance")
    s.add_argument("--out", help="write the solution file here")
    s.add_argument("--audit", choices=("off", "summary", "full"), default="summary")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--cover", help="start from this 2-edge cover (solution format)")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("gen", help="write a generated instance")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--l", type=int, default=2)
    s.add_argument("--n", type=int, default=8)
    s.add_argument("--density", type=float, default=0.35)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.add_argument("--cover-out", help="prop19 only: write the pinned starting cover")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", help="check a solution file against an instance")
    s.add_argument("instance")
    s.add_argument("solution")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="exact opt and tau by brute force")
    s.add_argument("instance")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("audit", help="solve with every credit audit and summarize")
    s.add_argument("instance")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_audit)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalError as ex:
        print(f"internal error: {ex}", file=sys.stderr)
        return 3
    except (MapError, ValueError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Compare the compiled and pure-Python search kernels on fixed corpora.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--seeds 60]

Both backends must agree on every answer; the script exits 1 otherwise.
"""

import argparse
import sys
import time

from artifact import kernels
from artifact.generators import gen_prop18, gen_prop19, gen_random


def corpus(seeds):
    out = [(f"random n=10 #{s}", gen_random(10, 0.35, s)) for s in range(seeds)]
    out += [(f"random n=12 #{s}", gen_random(12, 0.3, 1000 + s)) for s in range(seeds // 3)]
    out += [("prop18 k=1", gen_prop18(1)), ("prop19 k=1", gen_prop19(1)),
            ("prop19 k=2", gen_prop19(2))]
    return out


def run(backend, graphs, repeat):
    answers = []
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        answers = [(kernels.min_2cover(g, backend=backend)[0],
                    kernels.min_2ecss(g, backend=backend)[0]) for _, g in graphs]
        best = min(best, time.perf_counter() - t0)
    return best, answers


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seeds", type=int, default=60)
    args = ap.parse_args(argv)
    graphs = corpus(args.seeds)
    print(f"{len(graphs)} instances, best of {args.repeat}")
    t_py, a_py = run("python", graphs, args.repeat)
    print(f"python  {t_py:8.3f}s")
    if kernels.BACKEND != "cython":
        print("compiled kernels not built; nothing to compare")
        return 0
    t_c, a_c = run("cython", graphs, args.repeat)
    print(f"cython  {t_c:8.3f}s  speedup x{t_py / t_c:.1f}")
    if a_py != a_c:
        bad = [name for (name, _), x, y in zip(graphs, a_py, a_c) if x != y]
        print(f"backends disagree on {bad[:5]}")
        return 1
    print("answers agree")
    return 0


if __name__ == "__main__":
    sys.exit(main())

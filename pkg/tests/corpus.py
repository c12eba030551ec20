"""Seeded corpora shared by the tests. Every list is rebuilt from fixed
seeds, so the same instances come back on every run."""

import random
from functools import lru_cache

from artifact.generators import gen_planted, gen_random, gen_ring


@lru_cache(maxsize=None)
def fuzz_corpus(count=500):
    """Random 2EC instances on at most 12 nodes with mixed densities."""
    out = []
    for seed in range(count):
        rng = random.Random(seed)
        n = rng.randint(4, 12)
        out.append(gen_random(n, rng.choice([0.25, 0.35, 0.5]), seed))
    return tuple(out)


@lru_cache(maxsize=None)
def ring_corpus(count=300):
    """Sparse instances on at most 12 nodes whose covers keep bridges."""
    out = []
    for seed in range(count):
        n = random.Random(10_000 + seed).randint(6, 12)
        out.append(gen_ring(n, 10_000 + seed))
    return tuple(out)


@lru_cache(maxsize=None)
def small_corpus(count=200, max_m=12):
    """Instances with at most `max_m` edges, for exhaustive cover checks."""
    out, seed = [], 0
    while len(out) < count:
        rng = random.Random(seed)
        g = gen_random(rng.randint(3, 7), rng.choice([0.3, 0.5, 0.7]), seed)
        seed += 1
        if g.m <= max_m:
            out.append(g)
    return tuple(out)


@lru_cache(maxsize=None)
def planted_corpus(count=200, n_max=10):
    return tuple(gen_planted(n_max, seed) for seed in range(count))

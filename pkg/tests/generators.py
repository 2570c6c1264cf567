"""Random polymatroid instances for the test corpus.

Instances are truncated weighted-coverage functions: each ground-set
element covers a small subset of a weighted universe, the rank of a
subset is the total weight covered, and half the instances are capped
at a random level.  Both steps preserve the rank axioms, singleton
ranks stay at most 3 by construction, and the family is rich enough to
exercise every structural feature the library extracts (including
instances whose closed-form coefficients break beyond the guaranteed
range).
"""

from __future__ import annotations

import random

from polymat import Polymatroid, RankTable


def random_polymatroid(rng: random.Random, n: int | None = None) -> Polymatroid:
    if n is None:
        n = rng.randint(2, 5)
    universe = range(rng.randint(1, 6))
    weights = [rng.randint(1, 3) for _ in universe]
    covers = []
    for _ in range(n):
        budget = 3
        chosen = set()
        for x in rng.sample(list(universe), len(universe)):
            if weights[x] <= budget and rng.random() < 0.45:
                chosen.add(x)
                budget -= weights[x]
        covers.append(frozenset(chosen))

    def coverage(subset: tuple[int, ...]) -> int:
        covered = set()
        for e in subset:
            covered |= covers[e - 1]
        return sum(weights[x] for x in covered)

    full = coverage(tuple(range(1, n + 1)))
    if full > 0 and rng.random() < 0.5:
        cap = rng.randint(1, full)
        rank = lambda subset: min(coverage(subset), cap)
    else:
        rank = coverage
    return Polymatroid(RankTable.from_function(n, rank, max_n=n))


def corpus(seed: int = 20260814, count: int = 200) -> list[Polymatroid]:
    rng = random.Random(seed)
    return [random_polymatroid(rng) for _ in range(count)]

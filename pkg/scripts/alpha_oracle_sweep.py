#!/usr/bin/env python3
"""Exhaustively compare the alpha-equivalence decision procedure against
the nameless-conversion oracle on enumerated terms.

Enumerates every term up to --size over a 3-name pool, groups terms by
their de Bruijn image, and checks the biconditional
``alpha_eq(t, u) <-> to_debruijn(t) == to_debruijn(u)`` over every pair
inside each class plus a sampled set of cross-class pairs.
"""

import argparse
import itertools
import pathlib
import random
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from nomset.atoms import Name
from nomset.lam import all_terms, alpha_eq, to_debruijn


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=6)
    parser.add_argument("--cross-samples", type=int, default=50_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    pool = tuple(Name(i) for i in range(3))
    start = time.perf_counter()
    universe = list(all_terms(args.size, pool))
    classes = {}
    for t in universe:
        classes.setdefault(to_debruijn(t), []).append(t)
    sizes = sorted((len(v) for v in classes.values()), reverse=True)
    print(
        f"{len(universe)} terms up to size {args.size}, "
        f"{len(classes)} alpha-classes, largest {sizes[:5]}"
    )

    mismatches = 0
    within = 0
    for members in classes.values():
        for t, u in itertools.combinations(members, 2):
            within += 1
            if not alpha_eq(t, u):
                mismatches += 1
                print(f"MISMATCH (should be equal): {t!r} vs {u!r}")

    rng = random.Random(args.seed)
    image = {id(t): to_debruijn(t) for t in universe}
    cross = 0
    while cross < args.cross_samples:
        t, u = rng.choice(universe), rng.choice(universe)
        if image[id(t)] == image[id(u)]:
            continue
        cross += 1
        if alpha_eq(t, u):
            mismatches += 1
            print(f"MISMATCH (should differ): {t!r} vs {u!r}")

    elapsed = time.perf_counter() - start
    print(
        f"{within} within-class pairs, {cross} cross-class samples, "
        f"{mismatches} mismatches, {elapsed:.1f}s"
    )
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run the randomized law checker over every shipped nominal instance."""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from nomset.abstraction import instance_abstraction
from nomset.lam import instance_term
from nomset.nominal import (
    check_laws,
    instance_list,
    instance_name,
    instance_nameset,
    instance_option,
    instance_pair,
    instance_sum,
    instance_trivial,
)
from nomset.samplers import (
    abstraction_gen,
    bool_gen,
    name_gen,
    nameset_gen,
    option_gen,
    pair_gen,
    sum_gen,
    term_gen,
    tuple_gen,
)


def shipped_instances():
    iname = instance_name()
    return [
        ("name", iname, name_gen()),
        ("bool", instance_trivial(), bool_gen()),
        ("pair(name,name)", instance_pair(iname, iname), pair_gen(name_gen(), name_gen())),
        ("sum(name,bool)", instance_sum(iname, instance_trivial()), sum_gen(name_gen(), bool_gen())),
        ("option(name)", instance_option(iname), option_gen(name_gen())),
        ("list(name)", instance_list(iname), tuple_gen(name_gen())),
        ("nameset", instance_nameset(), nameset_gen()),
        ("abstraction(name)", instance_abstraction(iname), abstraction_gen(name_gen(), name_gen())),
        ("term", instance_term(), term_gen()),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    failures = 0
    for label, inst, gen in shipped_instances():
        start = time.perf_counter()
        report = check_laws(inst, gen, trials=args.trials, seed=args.seed)
        elapsed = time.perf_counter() - start
        status = "ok" if report.ok else "FAIL"
        print(f"{label:20s} {status:4s} ({args.trials} trials/law, {elapsed:.2f}s)")
        for result in report.failures():
            failures += 1
            print(f"  {result.law}: counterexample {result.counterexample!r}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

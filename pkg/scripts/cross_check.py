"""Sweep random networks and compare the traversal with the trail-enumeration oracle."""

import argparse
import random
import time

from bayesball import bayes_ball
from bayesball.generate import GenParams, random_case
from bayesball.oracle import oracle_irrelevant, oracle_requisite_probability, oracle_visited


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cases", type=int, default=5000)
    parser.add_argument("--max-nodes", type=int, default=12)
    parser.add_argument("--max-arc-prob", type=float, default=0.7)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    meta = random.Random(args.seed)
    t0 = time.perf_counter()
    bad = 0
    for i in range(args.cases):
        params = GenParams(
            meta.randint(1, args.max_nodes),
            meta.uniform(0.05, args.max_arc_prob),
            meta.uniform(0, 0.5),
            meta.uniform(0, 0.5),
            seed=args.seed * 1_000_003 + i,
        )
        net, q = random_case(params)
        marks = bayes_ball.run(net, q)
        res = bayes_ball.requisites(net, q, marks)
        ok = (
            res.irrelevant == oracle_irrelevant(net, q.targets, q.observed)
            and marks.visited == oracle_visited(net, q.targets, q.observed)
            and res.requisite_probability == oracle_requisite_probability(net, q.targets, q.observed)
        )
        if not ok:
            bad += 1
            print(f"mismatch: {params}")
    print(f"{args.cases} cases, {bad} mismatches, {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()

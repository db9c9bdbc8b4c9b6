"""Visit counts on blocked chains and on full-graph queries of chains and sparse DAGs."""

import argparse

from bayesball.bench import chain_network, chain_pair, full_graph_run, linear_fit, sparse_full_runs


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[1_000, 10_000, 100_000])
    parser.add_argument("--mean-parents", type=float, default=1.5)
    parser.add_argument("--seed", type=int, default=11)
    args = parser.parse_args()

    print("blocked at the midpoint")
    print(f"{'n':>8} {'visits':>8} {'prefix arcs':>12} {'ratio':>6} {'open visits':>12}")
    for n in args.sizes:
        blocked, open_ = chain_pair(n)
        print(f"{n:>8} {blocked.visits_executed:>8} {blocked.visited_arcs:>12} "
              f"{blocked.visits_executed / blocked.visited_arcs:>6.3f} {open_.visits_executed:>12}")

    families = {
        "chain": [full_graph_run(chain_network(n)) for n in args.sizes],
        "sparse": sparse_full_runs(args.sizes, args.mean_parents, args.seed),
    }
    for name, runs in families.items():
        slope, ratios = linear_fit([r.arcs for r in runs], [r.visits_executed for r in runs])
        print(f"\nfull graph, {name}: slope {slope:.4f}")
        for r, ratio in zip(runs, ratios):
            print(f"{r.nodes:>8} nodes {r.arcs:>8} arcs {r.visits_executed:>8} visits  ratio {ratio:.4f}  ({ratio / slope - 1:+.2%})")


if __name__ == "__main__":
    main()

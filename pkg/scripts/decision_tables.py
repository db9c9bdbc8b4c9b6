"""Print the per-decision requisite tables for the bundled diagrams, then
check resumed sweeps against restarts on random diagrams."""

import argparse
import warnings

from bayesball import fixtures
from bayesball.decision import RequisiteWarning, decision_requisites, format_table, restart_requisites
from bayesball.generate import random_influence_diagram
from bayesball.graph import sorted_ids


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--diagrams", type=int, default=2000)
    args = parser.parse_args()

    for name in ("EXPT-a", "EXPT-g"):
        print(name)
        print(format_table(decision_requisites(fixtures.BUILDERS[name]()), sort=sorted_ids))
        print()

    bad = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RequisiteWarning)
        for seed in range(args.diagrams):
            diagram = random_influence_diagram(seed)
            resumed, restarted = decision_requisites(diagram), restart_requisites(diagram)
            if resumed.table() != restarted.table() or resumed.marks.marks() != restarted.marks.marks():
                bad += 1
                print(f"mismatch at seed {seed}")
    print(f"{args.diagrams} random diagrams, {bad} mismatches")


if __name__ == "__main__":
    main()

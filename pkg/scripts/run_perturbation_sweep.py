#!/usr/bin/env python3
"""Sweep the perturbation size and record entry distances to partial isometries.

For each delta, partial isometries with projections in the algebra are
perturbed by support-respecting noise of operator norm delta, and the worst
entrywise distance to a partial isometry is recorded.  The sweep probes how
the entrywise property degrades; it records, it does not assert.

Usage:
    python scripts/run_perturbation_sweep.py --m 3 --dims 2 --trials 25 --seed 0 \
        --deltas 0,1e-8,1e-6,1e-4,1e-2,1e-1,0.3
"""

import argparse
import json

from cyclealg.matrix_model import MatrixAlgebraModel, perturbed_entry_report


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m", type=int, default=3)
    parser.add_argument("--dims", default="2")
    parser.add_argument("--trials", type=int, default=25)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--epsilon", type=float, default=1e-4)
    parser.add_argument("--deltas", default="0,1e-8,1e-6,1e-4,1e-2,1e-1,0.3")
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    dims = [int(x) for x in args.dims.split(",")]
    if len(dims) == 1:
        dims = dims * (2 * args.m)
    model = MatrixAlgebraModel(args.m, tuple(dims))

    table = []
    for delta in (float(x) for x in args.deltas.split(",")):
        report = perturbed_entry_report(model, delta=delta, trials=args.trials,
                                        epsilon=args.epsilon, seed=args.seed)
        table.append({"delta": delta,
                      "max_entry_deviation": report["max_entry_deviation"],
                      "within_epsilon": report["within_epsilon"]})

    if args.json:
        print(json.dumps({"m": args.m, "dims": dims, "trials": args.trials,
                          "seed": args.seed, "epsilon": args.epsilon,
                          "table": table}, sort_keys=True, indent=2))
    else:
        print(f"m={args.m} dims={dims} trials={args.trials} seed={args.seed}")
        print(f"{'delta':>12}  {'max entry deviation':>20}  within {args.epsilon:g}")
        for row in table:
            print(f"{row['delta']:>12.3e}  {row['max_entry_deviation']:>20.6e}  "
                  f"{row['within_epsilon']}")


if __name__ == "__main__":
    main()

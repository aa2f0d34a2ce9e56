#!/usr/bin/env python3
"""Search every registered counterexample target and save the witnesses.

Each target is a statement that fails once one of its hypotheses is
dropped; the search looks for a robust violation (margin below
-10*tolerance) and writes a replayable witness document per target.

    python3 scripts/search_counterexamples.py
    python3 scripts/search_counterexamples.py --budget 50000 --seed 3
"""

import argparse
from pathlib import Path

from svineq.cli import EXIT_EXHAUSTED, main as cli_main
from svineq.fuzzer import SEARCH_TARGET_IDS


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget", type=int, default=100000, help="restarts per target")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--out-dir", default="reports", help="directory for witness documents"
    )
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    exhausted = []
    for target in sorted(SEARCH_TARGET_IDS):
        out = out_dir / f"witness-{target}-seed{args.seed}.json"
        rc = cli_main(
            [
                "search",
                "--target",
                target,
                "--budget",
                str(args.budget),
                "--seed",
                str(args.seed),
                "--out",
                str(out),
            ]
        )
        if rc == EXIT_EXHAUSTED:
            exhausted.append(target)
        else:
            print(f"witness written to {out}")
    if exhausted:
        print(f"exhausted without a witness: {', '.join(exhausted)}")
        return EXIT_EXHAUSTED
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

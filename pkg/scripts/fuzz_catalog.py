#!/usr/bin/env python3
"""Run a seeded fuzz campaign over the whole inequality catalog.

Writes one campaign document per run and prints the per-target summary.

    python3 scripts/fuzz_catalog.py
    python3 scripts/fuzz_catalog.py --trials 1000 --dims 2..8 --seed 7
"""

import argparse
from pathlib import Path

from svineq.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dims", default="2,3,5,8")
    parser.add_argument("--trials", type=int, default=500)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument(
        "--out-dir", default="reports", help="directory for the campaign document"
    )
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    out = out_dir / f"catalog-seed{args.seed}-trials{args.trials}.json"
    rc = cli_main(
        [
            "fuzz",
            "--ineq",
            "all",
            "--dims",
            args.dims,
            "--trials",
            str(args.trials),
            "--seed",
            str(args.seed),
            "--out",
            str(out),
        ]
    )
    print(f"campaign document written to {out}")
    return rc


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Generate a seeded Zipf workload and sweep sketch table sizes against it.

Writes one CSV row per (s1, s2) configuration with measured and theoretical
error statistics, ready for plotting space-accuracy trade-off curves.

Example:
    python scripts/run_sweep.py --n 500000 --phi1 0.01 --phi2 0.15 \
        --s1-list 1000,1500,2000,2500,3000 --s2-list 500 --out sweep.csv
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from chh import ZipfWorkloadSpec, generate_zipf, sweep, sweep_csv_lines, write_sweep_csv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=200_000, help="tuples to generate")
    parser.add_argument("--primary-domain", type=int, default=10_000)
    parser.add_argument("--secondary-domain", type=int, default=1_000)
    parser.add_argument("--skew1", type=float, default=1.1)
    parser.add_argument("--skew2", type=float, default=1.0)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--phi1", default="0.01")
    parser.add_argument("--phi2", default="0.15")
    parser.add_argument("--s1-list", default="1000,1500,2000,2500,3000")
    parser.add_argument("--s2-list", default="500")
    parser.add_argument("--out", default="sweep.csv")
    args = parser.parse_args()

    spec = ZipfWorkloadSpec(
        tuple_count=args.n,
        primary_domain=args.primary_domain,
        secondary_domain=args.secondary_domain,
        primary_skew=args.skew1,
        secondary_skew=args.skew2,
        seed=args.seed,
    )
    source = generate_zipf(spec)
    rows = sweep(
        source,
        args.phi1,
        args.phi2,
        [int(v) for v in args.s1_list.split(",")],
        [int(v) for v in args.s2_list.split(",")],
    )
    write_sweep_csv(rows, args.out)
    for line in sweep_csv_lines(rows):
        print(line)
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

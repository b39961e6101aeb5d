#!/usr/bin/env python3
"""Scaled-down cost comparison: naive full counting vs the sketch.

Runs both over the same seeded Zipf workload and prints stored-pair counts
(the shared space measure) and wall-clock times. Timing numbers are
indicative only; nothing asserts on them.

Example:
    python scripts/space_time_comparison.py --n 2000000 --s1 3000 --s2 2000
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from chh import ChhParams, ZipfWorkloadSpec, generate_zipf, space_time_comparison


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=1_000_000)
    parser.add_argument("--primary-domain", type=int, default=100_000)
    parser.add_argument("--secondary-domain", type=int, default=10_000)
    parser.add_argument("--skew1", type=float, default=1.1)
    parser.add_argument("--skew2", type=float, default=1.0)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--phi1", default="0.001")
    parser.add_argument("--phi2", default="0.001")
    parser.add_argument("--s1", type=int, default=3000)
    parser.add_argument("--s2", type=int, default=2000)
    args = parser.parse_args()

    spec = ZipfWorkloadSpec(
        tuple_count=args.n,
        primary_domain=args.primary_domain,
        secondary_domain=args.secondary_domain,
        primary_skew=args.skew1,
        secondary_skew=args.skew2,
        seed=args.seed,
    )
    params = ChhParams.from_raw(args.phi1, args.phi2, args.s1, args.s2)
    result = space_time_comparison(generate_zipf(spec), params)

    ratio = result.naive_stored_pairs / max(result.sketch_stored_pairs, 1)
    print(f"tuples processed        {result.n}")
    print(f"naive stored pairs      {result.naive_stored_pairs}")
    print(f"sketch stored pairs     {result.sketch_stored_pairs}")
    print(f"space ratio             {ratio:.1f}x")
    print(f"naive seconds           {result.naive_seconds:.2f}")
    print(f"sketch seconds          {result.sketch_seconds:.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Tabulate complete and weighted game counts for 1..N agents.

    python3 scripts/run_counts.py 7
    python3 scripts/run_counts.py 8 --checkpoint counts8.txt   # hours; resumable
"""

import argparse
import time

from csgames.enumeration import count_games


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("nmax", type=int)
    p.add_argument("--checkpoint", help="checkpoint file for the largest n (resumed if present)")
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()
    print(f"{'n':>2} {'complete':>10} {'weighted':>10} {'seconds':>9}")
    for n in range(1, args.nmax + 1):
        start = time.monotonic()
        ckpt = args.checkpoint if n == args.nmax else None
        r = count_games(n, jobs=args.jobs, checkpoint=ckpt)
        print(f"{n:>2} {r.complete:>10} {r.weighted:>10} {time.monotonic() - start:>9.1f}", flush=True)


if __name__ == "__main__":
    main()

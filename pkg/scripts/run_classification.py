"""Classify every composition up to N agents and list the minimal non-weighted ones.

    python3 scripts/run_classification.py 7
"""

import argparse

from csgames.classification import conjecture_check, minimal_nonweighted


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("nmax", type=int)
    p.add_argument("--quiet", action="store_true", help="skip the per-composition verdicts")
    args = p.parse_args()
    report = conjecture_check(args.nmax)
    if not args.quiet:
        for comp, v in report.verdicts.items():
            origin = f" from {v.origin}" if v.origin is not None else ""
            print(f"{str(comp):<22} {v.status:<12} {v.basis}{origin}")
    for line in report.lines():
        print(line)
    minimal = minimal_nonweighted(args.nmax)
    print(f"{len(minimal)} minimal non-weighted compositions:")
    for comp in minimal:
        print(f"  {comp}")


if __name__ == "__main__":
    main()

"""Check the weighted star families over a range of star values.

    python3 scripts/run_family.py --range 1..12
    python3 scripts/run_family.py '*,3' --range 1..20
"""

import argparse

from csgames.classification import WEIGHTED_FAMILIES
from csgames.constructions import StarFamily, family_check


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("family", nargs="*", help="families such as '1,*,2'; default: all known weighted ones")
    p.add_argument("--range", default="1..8", help="star values a..b")
    args = p.parse_args()
    lo, _, hi = args.range.partition("..")
    stars = range(int(lo), int(hi or lo) + 1)
    families = [StarFamily.parse(f) for f in args.family] or list(WEIGHTED_FAMILIES)
    for family in families:
        report = family_check(family, stars)
        games = sum(e.complete for e in report.entries)
        misses = sum(e.candidate_misses for e in report.entries)
        verdict = "all weighted" if report.all_weighted else "NOT all weighted"
        if games == 0:
            verdict = "no complete games in range"
        print(f"{str(family):<12} members={len(report.entries):<3} games={games:<8} "
              f"candidates={report.candidates:<4} misses={misses:<3} {verdict}", flush=True)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Run the full verification suite and write the report.

Usage: python scripts/run_theorems.py [report.json]

Equivalent to `arclab theorems --out report.json` with default limits, plus
a short console summary per claim family.
"""

import sys
from collections import Counter

from arclab.theorems import Limits, run_all


def main() -> int:
    out = sys.argv[1] if len(sys.argv) > 1 else "report.json"
    report = run_all(Limits())
    with open(out, "w") as fh:
        fh.write(report.dumps())
    by_claim = Counter((c.claim, c.status) for c in report.claims)
    width = max(len(claim) for claim, _ in by_claim)
    for (claim, status), count in sorted(by_claim.items()):
        print(f"{claim:<{width}}  {status:<4}  x{count}")
    print(f"\nwrote {out}: {len(report.claims)} claims, all_passed={report.all_passed}")
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Scan a bounds snapshot for Plotkin pairs that match or improve the
recorded lower bounds, then print per-field coverage statistics.

Run from the repository root:

    python3 demos/03_scan_tables.py
"""

import os

from plotkin import LIMITS, load_snapshot, plotkin_scan, shortened_findings, stats

TABLE = os.path.join(os.path.dirname(__file__), "..", "fixtures", "paper_sixteen.tbl")


def main() -> None:
    table = load_snapshot(TABLE)
    print(f"snapshot entries: {len(table)}")

    for q in (3, 4):
        direct = plotkin_scan(table, q)
        findings = direct + shortened_findings(table, direct)
        hits = [f for f in findings if f.classification in ("Improves", "Matches")]
        print(f"\nGF({q}): {len(hits)} Plotkin hits")
        for f in sorted(hits, key=lambda f: (f.length, f.k)):
            print(
                f"  [{f.length},{f.k}] d>={f.plotkin_d} from [{f.n},{f.k1}]+"
                f"[{f.n},{f.k2}]  table d_low={f.table_d_low}  -> {f.classification}"
            )

    print("\ncoverage statistics (even-length cells reachable by a split):")
    print("q\tcells\tplotkin\tpercent")
    for q in sorted(LIMITS):
        total, achievable, pct = stats(table, q)
        print(f"{q}\t{total}\t{achievable}\t{pct}")


if __name__ == "__main__":
    main()
